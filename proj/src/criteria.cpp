#include "hillduffing/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hillduffing/elliptic.hpp"
#include "hillduffing/error.hpp"
#include "hillduffing/quadrature.hpp"

namespace hd::criteria {

namespace {

using std::numbers::pi;

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr std::size_t kSamples = 10'000;

quad::QuadratureOptions tight() {
  quad::QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-14;
  return o;
}

struct Extremes {
  double min;
  double max;
};

// Analytic extremes when known, otherwise sampled ones widened by the
// observed Lipschitz bound times half the sample spacing.
Extremes extremes(const hill::PeriodicCoefficient& p) {
  if (p.analytic_min && p.analytic_max) return {*p.analytic_min, *p.analytic_max};
  const double h = p.period / static_cast<double>(kSamples);
  double lo = p(0.0);
  double hi = lo;
  double prev = lo;
  double lipschitz = 0.0;
  for (std::size_t i = 1; i <= kSamples; ++i) {
    const double v = p(h * static_cast<double>(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    lipschitz = std::max(lipschitz, std::abs(v - prev) / h);
    prev = v;
  }
  const double pad = 0.5 * h * lipschitz;
  return {p.analytic_min.value_or(lo - pad), p.analytic_max.value_or(hi + pad)};
}

CriterionVerdict inconclusive(Criterion c, std::string reason) {
  CriterionVerdict v;
  v.criterion = c;
  v.reason = std::move(reason);
  return v;
}

// The unique Burdina window (l pi, (l+1) pi) that can contain `phase`.
CriterionVerdict burdina_window(double phase, double log_ratio, double margin) {
  CriterionVerdict v;
  v.criterion = Criterion::Burdina;
  v.quantities["phase_integral"] = phase;
  v.quantities["log_ratio"] = log_ratio;
  const double ell = std::floor(phase / pi);
  const double slack = std::min(phase - ell * pi, (ell + 1.0) * pi - phase);
  v.quantities["window_slack"] = slack;
  v.quantities["candidate_ell"] = ell;
  if (ell >= 0.0 && log_ratio < 2.0 * slack - margin) {
    v.outcome = Outcome::GuaranteedStable;
    v.witness_ell = static_cast<unsigned>(ell);
  }
  return v;
}

// Integrand of Phi / Psi without the prefactor.
double phase_integral(double delta, double c) {
  const double d2 = delta * delta;
  auto f = [=](double th) {
    const double s = std::sin(th);
    const double s2 = s * s;
    return std::sqrt((c + d2 * s2) / (2.0 + d2 + d2 * s2));
  };
  return quad::integrate(f, 0.0, kHalfPi, tight()).value;
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::LiZhang: return "li_zhang";
    case Criterion::Zhukovskii: return "zhukovskii";
    case Criterion::Burdina: return "burdina";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  return o == Outcome::GuaranteedStable ? "S" : "I";
}

double li_zhang_bound() {
  const double s = elliptic::sigma_constant();
  return 64.0 / 3.0 * s * s * s * s;
}

CriterionVerdict li_zhang(const hill::PeriodicCoefficient& p) {
  const auto ext = extremes(p);
  if (ext.min < 0.0) return inconclusive(Criterion::LiZhang, "p takes negative values");

  const double T = p.period;
  const auto q = quad::integrate([&p](double t) { const double v = p(t); return v * v; },
                                 0.0, T, tight());
  if (!q.converged) return inconclusive(Criterion::LiZhang, "quadrature did not converge");

  CriterionVerdict v;
  v.criterion = Criterion::LiZhang;
  const double lhs = T * T * T * q.value;
  const double rhs = li_zhang_bound();
  const double margin = std::max(T * T * T * q.abs_error, kStrictMargin);
  v.quantities["lhs"] = lhs;
  v.quantities["rhs"] = rhs;
  v.quantities["quadrature_error"] = q.abs_error;
  if (lhs < rhs - margin) v.outcome = Outcome::GuaranteedStable;
  return v;
}

CriterionVerdict zhukovskii(const hill::PeriodicCoefficient& p) {
  const auto ext = extremes(p);
  if (ext.min < 0.0) return inconclusive(Criterion::Zhukovskii, "p takes negative values");

  CriterionVerdict v;
  v.criterion = Criterion::Zhukovskii;
  const double unit = pi * pi / (p.period * p.period);
  v.quantities["min_p"] = ext.min;
  v.quantities["max_p"] = ext.max;
  v.quantities["unit"] = unit;
  // Largest l with l^2 unit <= min p.
  double ell = std::floor(std::sqrt(ext.min / unit));
  while (ell > 0.0 && ell * ell * unit > ext.min) ell -= 1.0;
  while ((ell + 1.0) * (ell + 1.0) * unit <= ext.min) ell += 1.0;
  v.quantities["candidate_ell"] = ell;
  if (ext.max <= (ell + 1.0) * (ell + 1.0) * unit) {
    v.outcome = Outcome::GuaranteedStable;
    v.witness_ell = static_cast<unsigned>(ell);
  }
  return v;
}

CriterionVerdict burdina(const hill::PeriodicCoefficient& p) {
  if (!p.single_extremum_pair) {
    return inconclusive(Criterion::Burdina, "p lacks a unique max/min per period");
  }
  const auto ext = extremes(p);
  if (!(ext.min > 0.0)) return inconclusive(Criterion::Burdina, "p is not positive");

  const auto q = quad::integrate([&p](double t) { return std::sqrt(p(t)); }, 0.0,
                                 p.period, tight());
  if (!q.converged) return inconclusive(Criterion::Burdina, "quadrature did not converge");
  const double margin = std::max(2.0 * q.abs_error, kStrictMargin);
  return burdina_window(q.value, std::log(ext.max / ext.min), margin);
}

double phi(double delta, double gamma) {
  if (!(gamma >= 0.0) || delta == 0.0 || !std::isfinite(delta)) {
    throw DomainError("phi needs delta != 0 and gamma >= 0");
  }
  return 2.0 * std::numbers::sqrt2 * phase_integral(delta, gamma);
}

double psi(double delta, double omega) {
  if (!(omega > 0.0) || delta == 0.0 || !std::isfinite(delta)) {
    throw DomainError("psi needs delta != 0 and omega > 0");
  }
  // Written with sqrt(omega) inside the integrand.
  const double d2 = delta * delta;
  auto f = [=](double th) {
    const double s = std::sin(th);
    const double s2 = s * s;
    return std::sqrt(omega * (omega + d2 * s2) / (2.0 + d2 + d2 * s2));
  };
  return 2.0 * std::numbers::sqrt2 * quad::integrate(f, 0.0, kHalfPi, tight()).value;
}

CriterionVerdict burdina_condition_gamma(double delta, double gamma) {
  if (!(gamma > 0.0) || delta == 0.0) {
    return inconclusive(Criterion::Burdina, "needs delta != 0 and gamma > 0");
  }
  const double value = phi(delta, gamma);
  auto v = burdina_window(value, std::log1p(delta * delta / gamma), kStrictMargin);
  v.quantities["phi"] = value;
  return v;
}

CriterionVerdict burdina_condition_omega(double delta, double omega) {
  if (!(omega > 0.0) || delta == 0.0) {
    return inconclusive(Criterion::Burdina, "needs delta != 0 and omega > 0");
  }
  const double value = psi(delta, omega);
  auto v = burdina_window(value, std::log1p(delta * delta / omega), kStrictMargin);
  v.quantities["psi"] = value;
  return v;
}

double g_function(double delta) {
  if (!(delta > 0.0)) throw DomainError("g_function needs delta > 0");
  const double c = 2.0 / (delta * delta) + 1.0;
  auto weight = [c](double a) {
    const double s = std::sin(a);
    return 1.0 / std::sqrt(c + s * s);
  };
  const double quartic =
      quad::integrate([&](double a) { const double s = std::sin(a); return s * s * s * s * weight(a); },
                      0.0, kHalfPi, tight())
          .value;
  const double base = quad::integrate(weight, 0.0, kHalfPi, tight()).value;
  return 64.0 * quartic * base * base * base;
}

}  // namespace hd::criteria
