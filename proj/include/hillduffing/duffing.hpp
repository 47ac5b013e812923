#pragma once

// Closed-form solutions of the Duffing equation
//
//   omega * y'' + y + y^3 = 0,   y(0) = delta,  y'(0) = 0,
//
// with omega = 1 for the unscaled oscillator. The solution is
// delta * cn(t * sqrt((1 + delta^2) / omega), k) with k = delta / sqrt(2 (1 + delta^2)).

#include "hillduffing/elliptic.hpp"

namespace hd::duffing {

class DuffingParams {
 public:
  /// Throws DomainError if delta == 0 (or non-finite) or omega <= 0.
  explicit DuffingParams(double delta, double omega = 1.0);

  double delta() const { return delta_; }
  double omega() const { return omega_; }
  /// Elliptic modulus |delta| / sqrt(2 (1 + delta^2)), always below 1/sqrt 2.
  elliptic::EllipticModulus modulus() const;
  /// Time scale sqrt((1 + delta^2) / omega) multiplying t inside cn.
  double frequency() const;

 private:
  double delta_;
  double omega_;
};

double solution(const DuffingParams& p, double t);
double velocity(const DuffingParams& p, double t);

/// Least period 4 sqrt(omega / (1 + delta^2)) K(k). Even in delta.
double period(const DuffingParams& p);

/// E(delta) = delta^2/2 + delta^4/4 for the unscaled equation (omega = 1).
double energy(const DuffingParams& p);
/// Same formula as a function of the amplitude alone; energy(0) = 0.
double energy(double delta);

/// Energy of an arbitrary phase point (y, y') of the unscaled equation.
double phase_energy(double y, double ydot);

}  // namespace hd::duffing
