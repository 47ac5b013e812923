#include "hillduffing/duffing.hpp"

#include <cmath>
#include <string>

#include "hillduffing/error.hpp"

namespace hd::duffing {

DuffingParams::DuffingParams(double delta, double omega)
    : delta_(delta), omega_(omega) {
  if (!std::isfinite(delta) || delta == 0.0) {
    throw DomainError("Duffing amplitude delta must be finite and nonzero");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("Duffing scale omega must be positive, got " +
                      std::to_string(omega));
  }
}

elliptic::EllipticModulus DuffingParams::modulus() const {
  const double d = std::abs(delta_);
  return elliptic::EllipticModulus(d / std::sqrt(2.0 * (1.0 + d * d)));
}

double DuffingParams::frequency() const {
  return std::sqrt((1.0 + delta_ * delta_) / omega_);
}

double solution(const DuffingParams& p, double t) {
  return p.delta() * elliptic::jacobi(t * p.frequency(), p.modulus()).cn;
}

double velocity(const DuffingParams& p, double t) {
  const double s = p.frequency();
  const auto j = elliptic::jacobi(t * s, p.modulus());
  return -p.delta() * s * j.sn * j.dn;
}

double period(const DuffingParams& p) {
  return 4.0 * elliptic::complete_k(p.modulus()) / p.frequency();
}

double energy(const DuffingParams& p) {
  if (p.omega() != 1.0) {
    throw DomainError("Duffing energy is defined for the unscaled equation (omega = 1)");
  }
  return energy(p.delta());
}

double energy(double delta) {
  const double d2 = delta * delta;
  return 0.5 * d2 + 0.25 * d2 * d2;
}

double phase_energy(double y, double ydot) {
  const double y2 = y * y;
  return 0.5 * ydot * ydot + 0.5 * y2 + 0.25 * y2 * y2;
}

}  // namespace hd::duffing
