#include "hillduffing/tongues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hillduffing/error.hpp"
#include "hillduffing/parallel.hpp"

namespace hd::tongues {

namespace {

using std::numbers::pi;

double golden_max(const auto& f, double a, double b, double tol, double* arg) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  *arg = fc > fd ? c : d;
  return std::max(fc, fd);
}

// Shrinks [a, b] with g(a), g(b) of opposite sign down to tol.
double bisect(const auto& g, double a, double b, double ga, double tol) {
  while (std::abs(b - a) > tol) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::pair<double, double> default_window(Plane plane, int ell, double delta) {
  const double d2 = delta * delta;
  if (ell == 1) {
    if (plane == Plane::Gamma) return {1.0 - 0.05 - 0.05 * d2, 1.0 + 0.55 * d2 + 0.05};
    return {0.95, std::min(3.5, 1.0 + 0.5 * d2 + 0.05)};
  }
  if (delta > 0.5) {
    throw DomainError("trace_level_bracket: a seed window is required for ell >= 2 and delta > 0.5");
  }
  const auto [lo, hi] = asymptotic_tongue_bounds(plane, ell, delta);
  const double pad = 5.0 * d2 * d2 + 0.02 * (hi - lo) + 1e-3;
  return {lo - pad, hi + pad};
}

}  // namespace

std::string_view to_string(Plane p) { return p == Plane::Gamma ? "gamma" : "omega"; }

Plane parse_plane(std::string_view s) {
  if (s == "gamma") return Plane::Gamma;
  if (s == "omega") return Plane::Omega;
  throw DomainError("unknown plane '" + std::string(s) + "' (expected gamma or omega)");
}

double Axis::value(std::size_t i) const {
  if (count < 2) return lo;
  if (i + 1 == count) return hi;
  return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(count - 1);
}

std::vector<double> Axis::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

hill::PeriodicCoefficient plane_coefficient(Plane plane, double delta, double y) {
  return plane == Plane::Gamma ? hill::squared_duffing_coefficient(delta, y)
                               : hill::omega_coefficient(delta, y);
}

double plane_trace(Plane plane, double delta, double y, double integrator_tol) {
  if (delta == 0.0) {
    if (plane == Plane::Gamma) return hill::constant_coefficient_trace(y, pi);
    if (!(y > 0.0)) throw DomainError("omega must be positive");
    return hill::constant_coefficient_trace(y, pi * std::sqrt(y));
  }
  return hill::monodromy(plane_coefficient(plane, delta, y), integrator_tol).trace;
}

StabilityGrid scan(const ScanConfig& config) {
  if (config.x.count < 2 || config.y.count < 2) {
    throw DomainError("scan: each axis needs at least 2 points");
  }
  if (!(config.x.lo <= config.x.hi) || !(config.y.lo <= config.y.hi)) {
    throw DomainError("scan: axis ranges must be ordered (lo <= hi)");
  }
  StabilityGrid g;
  g.plane = config.plane;
  g.x_axis = config.x.values();
  g.y_axis = config.y.values();
  g.integrator_tol = config.integrator_tol;
  g.classifier = config.classifier;
  const std::size_t n = g.x_axis.size() * g.y_axis.size();
  g.trace.assign(n, std::numeric_limits<double>::quiet_NaN());
  g.classification.assign(n, hill::Stability::Boundary);

  parallel_for(n, config.workers, [&](std::size_t i) {
    const double x = g.x_axis[i / g.y_axis.size()];
    const double y = g.y_axis[i % g.y_axis.size()];
    try {
      g.trace[i] = plane_trace(g.plane, x, y, g.integrator_tol);
    } catch (const IntegrationFailure&) {
      g.trace[i] = std::numeric_limits<double>::quiet_NaN();
    } catch (const DomainError&) {
      g.trace[i] = std::numeric_limits<double>::quiet_NaN();
    }
    if (!std::isnan(g.trace[i])) g.classification[i] = g.classifier(g.trace[i]);
  });
  g.failed_cells = static_cast<std::size_t>(
      std::count_if(g.trace.begin(), g.trace.end(), [](double t) { return std::isnan(t); }));
  return g;
}

CriteriaGrid criteria_scan(Plane plane, const Axis& x, const Axis& y,
                           CriteriaSelection selection, unsigned workers) {
  if (x.count < 2 || y.count < 2) throw DomainError("criteria map: each axis needs at least 2 points");
  CriteriaGrid g;
  g.plane = plane;
  g.x_axis = x.values();
  g.y_axis = y.values();
  g.selection = selection;
  const std::size_t n = g.x_axis.size() * g.y_axis.size();
  using criteria::Outcome;
  g.li_zhang.assign(n, Outcome::Inconclusive);
  g.zhukovskii.assign(n, Outcome::Inconclusive);
  g.burdina.assign(n, Outcome::Inconclusive);

  parallel_for(n, workers, [&](std::size_t i) {
    const double delta = g.x_axis[i / g.y_axis.size()];
    const double c = g.y_axis[i % g.y_axis.size()];
    if (delta == 0.0 || !(c >= 0.0)) return;  // constant or sign-changing coefficient
    const auto p = plane_coefficient(plane, delta, c);
    if (selection.li_zhang) g.li_zhang[i] = criteria::li_zhang(p).outcome;
    if (selection.zhukovskii) g.zhukovskii[i] = criteria::zhukovskii(p).outcome;
    if (selection.burdina && c > 0.0) {
      g.burdina[i] = plane == Plane::Gamma ? criteria::burdina_condition_gamma(delta, c).outcome
                                           : criteria::burdina_condition_omega(delta, c).outcome;
    }
  });
  return g;
}

std::pair<double, double> first_tongue_gamma(double delta) {
  return {1.0, 1.0 + 0.5 * delta * delta};
}

std::string_view to_string(StripVerdict v) {
  switch (v) {
    case StripVerdict::Stable: return "stable";
    case StripVerdict::Unstable: return "unstable";
    case StripVerdict::Outside: return "outside";
  }
  return "?";
}

StripVerdict stability_strip_gamma(double delta, double gamma) {
  const double parabola = -0.5 * delta * delta;
  if (gamma > parabola && gamma < 1.0) return StripVerdict::Stable;
  if (gamma < parabola) return StripVerdict::Unstable;
  return StripVerdict::Outside;
}

std::pair<double, double> asymptotic_tongue_bounds(Plane plane, int ell, double delta) {
  if (ell < 2) throw DomainError("asymptotic tongue bounds need ell >= 2");
  const double l = ell;
  const double d2 = delta * delta;
  if (plane == Plane::Gamma) {
    const double base = 0.75 * l * l - 0.5;
    const double spread = 1.0 / (pi * l);
    return {l * l + (base - spread) * d2, l * l + (base + spread) * d2};
  }
  const double base = 0.375 * l - 0.25;
  const double spread = 1.0 / (2.0 * pi * l);
  return {l + (base - spread) * d2, l + (base + spread) * d2};
}

TongueBoundarySample trace_level_bracket(Plane plane, int ell, double delta,
                                         const BracketOptions& opts) {
  if (!(delta > 0.0)) throw DomainError("trace_level_bracket needs delta > 0");
  if (ell < 1) throw DomainError("tongue index must be >= 1");
  if (!(opts.threshold > 0.0 && opts.threshold <= 2.0)) {
    throw DomainError("threshold must lie in (0, 2]");
  }
  const auto [lo, hi] = opts.window ? *opts.window : default_window(plane, ell, delta);
  if (!(lo < hi)) throw DomainError("bracket window must satisfy lo < hi");

  auto level = [&](double v) {
    return std::abs(plane_trace(plane, delta, v, opts.integrator_tol)) - opts.threshold;
  };

  const std::size_t n = std::max<std::size_t>(opts.samples, 8);
  std::vector<double> xs(n + 1);
  std::vector<double> fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    fs[i] = level(xs[i]);
  }
  const auto best = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());

  double inner = xs[best];
  double inner_value = fs[best];
  std::size_t left = best;   // last sample index at or left of the inner point
  std::size_t right = best;  // first sample index at or right of it
  if (inner_value <= 0.0) {
    // Tongue may be thinner than the sampling: maximize between neighbours.
    const double a = xs[best == 0 ? 0 : best - 1];
    const double b = xs[std::min(best + 1, n)];
    inner_value = golden_max(level, a, b, opts.param_tol * 0.1, &inner);
    if (inner_value <= 0.0) {
      throw BracketNotFound("|trace| stays below " + std::to_string(opts.threshold) +
                            " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    left = best == 0 ? 0 : (inner >= xs[best] ? best : best - 1);
    right = std::min(left + 1, n);
  }

  // Walk outward to the first samples below the threshold.
  std::size_t il = left;
  while (il > 0 && fs[il] > 0.0) --il;
  std::size_t ir = right;
  while (ir < n && fs[ir] > 0.0) ++ir;
  if (fs[il] > 0.0 || fs[ir] > 0.0) {
    throw BracketNotFound("tongue edge lies outside the window [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }

  TongueBoundarySample out;
  out.ell = ell;
  out.delta = delta;
  out.lower = bisect(level, xs[il], inner, fs[il], opts.param_tol);
  out.upper = bisect(level, inner, xs[ir], inner_value, opts.param_tol);
  return out;
}

std::string_view to_string(AsymptoticClass c) {
  switch (c) {
    case AsymptoticClass::UnstableAtInfinity: return "unstable_at_infinity";
    case AsymptoticClass::StableAtInfinity: return "stable_at_infinity";
    case AsymptoticClass::Boundary: return "boundary";
  }
  return "?";
}

AsymptoticClass asymptotic_classification(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("asymptotic classification needs omega > 0");
  }
  // Largest j with j(j+1)/2 <= omega.
  double j = std::floor(0.5 * (std::sqrt(1.0 + 8.0 * omega) - 1.0));
  while (j * (j + 1.0) / 2.0 > omega) j -= 1.0;
  while ((j + 1.0) * (j + 2.0) / 2.0 <= omega) j += 1.0;
  if (j * (j + 1.0) / 2.0 == omega) return AsymptoticClass::Boundary;
  return std::fmod(j, 2.0) == 0.0 ? AsymptoticClass::StableAtInfinity
                                  : AsymptoticClass::UnstableAtInfinity;
}

int crossing_count(double omega) {
  if (omega > 0.0 && omega < 1.0) return 0;
  if (omega > 1.0 && omega <= 2.0) return 1;
  if (omega > 2.0 && omega < 3.0) return 3;
  if (omega == 3.0) return 2;
  if (omega > 3.0 && omega <= 4.0) return 4;
  if (omega > 4.0 && omega <= 5.0) return 6;
  if (omega > 5.0 && omega < 6.0) return 8;
  if (omega == 6.0) return 7;
  if (omega > 6.0 && omega <= 7.0) return 9;
  throw DomainError("crossing_count is tabulated for 0 < omega <= 7, omega != 1");
}

CrossingRecount count_crossings(double omega, double delta_lo, double delta_hi,
                                double step, double integrator_tol) {
  if (!(delta_lo > 0.0 && delta_hi > delta_lo && step > 0.0)) {
    throw DomainError("count_crossings needs 0 < delta_lo < delta_hi and step > 0");
  }
  const auto n = static_cast<std::size_t>(std::ceil((delta_hi - delta_lo) / step));
  std::vector<double> ds(n + 1);
  std::vector<double> fs(n + 1);
  auto level = [&](double d) {
    return std::abs(plane_trace(Plane::Omega, d, omega, integrator_tol)) - 2.0;
  };
  for (std::size_t i = 0; i <= n; ++i) {
    ds[i] = std::min(delta_hi, delta_lo + step * static_cast<double>(i));
    fs[i] = level(ds[i]);
  }

  CrossingRecount out;
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    if ((fs[i] > 0.0) != (fs[i + 1] > 0.0)) {
      ++out.crossings;
      out.locations.push_back(0.5 * (ds[i] + ds[i + 1]));
    }
  }
  // Near-miss extrema: a whole tongue (or stable gap) between two samples.
  constexpr double kNear = 1e-2;
  for (std::size_t i = 1; i < n; ++i) {
    const bool local_max = fs[i] >= fs[i - 1] && fs[i] >= fs[i + 1];
    const bool local_min = fs[i] <= fs[i - 1] && fs[i] <= fs[i + 1];
    if (local_max && fs[i] <= 0.0 && fs[i] > -kNear) {
      double arg = ds[i];
      const double peak = golden_max(level, ds[i - 1], ds[i + 1], 1e-9, &arg);
      if (peak > 0.0) {
        out.crossings += 2;
        out.locations.push_back(arg);
        out.locations.push_back(arg);
      }
    } else if (local_min && fs[i] > 0.0 && fs[i] < kNear) {
      double arg = ds[i];
      auto neg = [&](double d) { return -level(d); };
      const double dip = -golden_max(neg, ds[i - 1], ds[i + 1], 1e-9, &arg);
      if (dip <= 0.0) {
        out.crossings += 2;
        out.locations.push_back(arg);
        out.locations.push_back(arg);
      }
    }
  }
  std::sort(out.locations.begin(), out.locations.end());
  return out;
}

}  // namespace hd::tongues
