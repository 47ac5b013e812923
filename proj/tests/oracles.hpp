#pragma once
// Independent reference computations for the unit tests. Nothing here calls
// into the library's own quadrature, ODE or elliptic code.
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <boost/numeric/odeint.hpp>

namespace oracle {

inline double kronrod(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
}

// K(k) from its defining integral.
inline double complete_k(double k) {
  return kronrod([k](double a) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(a) * std::sin(a)); },
                 0.0, M_PI / 2);
}

struct Triple {
  double sn, cn, dn;
};

inline Triple boost_jacobi(double u, double k) {
  double cn = 0.0;
  double dn = 0.0;
  const double sn = boost::math::jacobi_elliptic(k, u, &cn, &dn);
  return {sn, cn, dn};
}

// sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn from (0, 1, 1).
inline Triple jacobi_ode(double u, double k) {
  using namespace boost::numeric::odeint;
  std::array<double, 3> y{0.0, 1.0, 1.0};
  auto rhs = [k](const std::array<double, 3>& s, std::array<double, 3>& d, double) {
    d[0] = s[1] * s[2];
    d[1] = -s[0] * s[2];
    d[2] = -k * k * s[0] * s[1];
  };
  integrate_adaptive(make_controlled(1e-14, 1e-14, runge_kutta_fehlberg78<std::array<double, 3>>()),
                     rhs, y, 0.0, u, 1e-3);
  return {y[0], y[1], y[2]};
}

// Duffing period from the energy integral with y = delta cos(phi).
inline double duffing_period(double delta) {
  const double d2 = delta * delta;
  return 4.0 * kronrod(
                   [d2](double phi) {
                     const double c = std::cos(phi);
                     return 1.0 / std::sqrt(1.0 + 0.5 * d2 * (1.0 + c * c));
                   },
                   0.0, M_PI / 2);
}

// Monodromy trace of xi'' + p(t) xi = 0 over [0, period] with rkf78.
inline double monodromy_trace(const std::function<double(double)>& p, double period) {
  using namespace boost::numeric::odeint;
  using S = std::array<double, 4>;
  S y{1.0, 0.0, 0.0, 1.0};
  auto rhs = [&p](const S& s, S& d, double t) {
    const double q = p(t);
    d[0] = s[1];
    d[1] = -q * s[0];
    d[2] = s[3];
    d[3] = -q * s[2];
  };
  integrate_adaptive(make_controlled(1e-13, 1e-13, runge_kutta_fehlberg78<S>()), rhs, y, 0.0,
                     period, period / 1000);
  return y[0] + y[3];
}

// Fixed-seed generator so every property test draws the same points.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240611ULL + salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(g);
}

}  // namespace oracle
