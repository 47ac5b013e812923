#include "hillduffing/hill.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hillduffing/duffing.hpp"
#include "hillduffing/error.hpp"
#include "hillduffing/ode.hpp"

namespace hd::hill {

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Boundary: return "boundary";
  }
  return "?";
}

Stability Classifier::operator()(double trace) const {
  const double a = std::abs(trace);
  if (a < level - band) return Stability::Stable;
  if (a > level + band) return Stability::Unstable;
  return Stability::Boundary;
}

PeriodicCoefficient squared_duffing_coefficient(double delta, double gamma) {
  if (delta == 0.0) {
    throw DomainError("squared Duffing coefficient needs delta != 0 (p would be constant)");
  }
  const duffing::DuffingParams params(delta);
  const auto k = params.modulus();
  const double s = params.frequency();
  const double d2 = delta * delta;
  PeriodicCoefficient p;
  p.eval = [=](double t) {
    const double cn = elliptic::jacobi(s * t, k).cn;
    return gamma + d2 * cn * cn;
  };
  p.period = 0.5 * duffing::period(params);
  p.analytic_min = gamma;
  p.analytic_max = gamma + d2;
  p.single_extremum_pair = true;
  return p;
}

PeriodicCoefficient omega_coefficient(double delta, double omega) {
  if (delta == 0.0) {
    throw DomainError("omega coefficient needs delta != 0 (p would be constant)");
  }
  const duffing::DuffingParams params(delta, omega);
  const auto k = params.modulus();
  const double s = params.frequency();
  const double d2 = delta * delta;
  PeriodicCoefficient p;
  p.eval = [=](double t) {
    const double cn = elliptic::jacobi(s * t, k).cn;
    return omega + d2 * cn * cn;
  };
  p.period = 0.5 * duffing::period(params);
  p.analytic_min = omega;
  p.analytic_max = omega + d2;
  p.single_extremum_pair = true;
  return p;
}

PeriodicCoefficient mathieu_coefficient(double a, double q) {
  PeriodicCoefficient p;
  p.eval = [=](double t) { return a + 2.0 * q * std::cos(2.0 * t); };
  p.period = std::numbers::pi;
  p.analytic_min = a - 2.0 * std::abs(q);
  p.analytic_max = a + 2.0 * std::abs(q);
  p.single_extremum_pair = q != 0.0;
  return p;
}

std::array<std::complex<double>, 2> multipliers_from_trace(double trace) {
  const double disc = trace * trace - 4.0;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    // Avoid cancellation in the small root; the product is 1.
    const double big = 0.5 * (trace + std::copysign(r, trace));
    const double small = big != 0.0 ? 1.0 / big : 0.0;
    return {std::complex<double>(big, 0.0), std::complex<double>(small, 0.0)};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {std::complex<double>(0.5 * trace, im),
          std::complex<double>(0.5 * trace, -im)};
}

double constant_coefficient_trace(double c, double period) {
  if (c > 0.0) return 2.0 * std::cos(std::sqrt(c) * period);
  if (c < 0.0) return 2.0 * std::cosh(std::sqrt(-c) * period);
  return 2.0;
}

MonodromyReport monodromy(const PeriodicCoefficient& p, const MonodromyOptions& opts) {
  if (!(p.period > 0.0) || !std::isfinite(p.period)) {
    throw DomainError("monodromy: coefficient period must be positive and finite");
  }
  if (!(opts.tol >= 1e-12 && opts.tol <= 1e-6)) {
    throw DomainError("monodromy: tolerance must lie in [1e-12, 1e-6]");
  }
  // Columns of the fundamental matrix: (x1, x1', x2, x2').
  ode::State<4> y{1.0, 0.0, 0.0, 1.0};
  auto rhs = [&p](double t, const ode::State<4>& s) {
    const double c = p.eval(t);
    return ode::State<4>{s[1], -c * s[0], s[3], -c * s[2]};
  };
  ode::StepControl ctl;
  ctl.rel_tol = opts.tol;
  ctl.abs_tol = opts.tol;
  ctl.max_steps = opts.max_steps;
  ctl.initial_step = p.period * 1e-3;
  ode::IntegrationStats stats;
  ode::integrate<4>(rhs, y, 0.0, p.period, ctl, &stats);

  MonodromyReport r;
  r.matrix = {{{y[0], y[2]}, {y[1], y[3]}}};
  r.trace = y[0] + y[3];
  r.det_residual = std::abs(y[0] * y[3] - y[2] * y[1] - 1.0);
  r.multipliers = multipliers_from_trace(r.trace);
  r.classification = opts.classifier(r.trace);
  r.steps = stats.accepted + stats.rejected;
  return r;
}

MonodromyReport monodromy(const PeriodicCoefficient& p, double tol) {
  MonodromyOptions opts;
  opts.tol = tol;
  return monodromy(p, opts);
}

double exact_solution_gamma(ExactSolution kind, double delta) {
  switch (kind) {
    case ExactSolution::CnAtGammaOne: return 1.0;
    case ExactSolution::SnAtParabola: return 1.0 + 0.5 * delta * delta;
    case ExactSolution::DnAtNegativeParabola: return -0.5 * delta * delta;
  }
  return 0.0;
}

double exact_solution_residual(ExactSolution kind, double delta,
                               std::span<const double> t_samples) {
  const duffing::DuffingParams params(delta);
  const auto mod = params.modulus();
  const double k2 = mod.value() * mod.value();
  const double s = params.frequency();
  const double s2 = s * s;
  const double gamma = exact_solution_gamma(kind, delta);

  double worst = 0.0;
  for (double t : t_samples) {
    const auto j = elliptic::jacobi(s * t, mod);
    double xi = 0.0;
    double xi_dd = 0.0;
    switch (kind) {
      case ExactSolution::CnAtGammaOne:
        xi = j.cn;
        xi_dd = -s2 * j.cn * (j.dn * j.dn - k2 * j.sn * j.sn);
        break;
      case ExactSolution::SnAtParabola:
        xi = j.sn;
        xi_dd = -s2 * j.sn * (j.dn * j.dn + k2 * j.cn * j.cn);
        break;
      case ExactSolution::DnAtNegativeParabola:
        xi = j.dn;
        xi_dd = -s2 * k2 * j.dn * (j.cn * j.cn - j.sn * j.sn);
        break;
    }
    const double y = delta * j.cn;
    worst = std::max(worst, std::abs(xi_dd + (gamma + y * y) * xi));
  }
  return worst;
}

}  // namespace hd::hill
