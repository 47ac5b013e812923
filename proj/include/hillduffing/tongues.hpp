#pragma once

// Resonance-tongue structure in the (delta, gamma) plane of
// xi'' + (gamma + y^2) xi = 0 and the (delta, omega) plane of
// xi'' + (omega + Theta_omega^2) xi = 0.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hillduffing/criteria.hpp"
#include "hillduffing/hill.hpp"

namespace hd::tongues {

enum class Plane { Gamma, Omega };

std::string_view to_string(Plane p);
/// Accepts "gamma" or "omega"; throws DomainError otherwise.
Plane parse_plane(std::string_view s);

/// Inclusive uniform axis: value(i) = lo + i (hi - lo) / (count - 1).
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  double value(std::size_t i) const;
  std::vector<double> values() const;
};

/// Hill coefficient for one point of a parameter plane (delta != 0).
hill::PeriodicCoefficient plane_coefficient(Plane plane, double delta, double y);

/// Monodromy trace for one plane point. delta == 0 uses the constant
/// coefficient over the limit period (pi in the gamma plane, pi sqrt(omega)
/// in the omega plane).
double plane_trace(Plane plane, double delta, double y, double integrator_tol = 1e-10);

struct ScanConfig {
  Plane plane = Plane::Gamma;
  Axis x;  // delta
  Axis y;  // gamma or omega
  double integrator_tol = 1e-10;
  hill::Classifier classifier{};
  unsigned workers = 1;
};

struct StabilityGrid {
  Plane plane = Plane::Gamma;
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  // Row-major with x outermost: index = ix * y_axis.size() + iy.
  std::vector<double> trace;  // NaN where integration failed
  std::vector<hill::Stability> classification;
  double integrator_tol = 0.0;
  hill::Classifier classifier{};
  std::size_t failed_cells = 0;

  std::size_t index(std::size_t ix, std::size_t iy) const { return ix * y_axis.size() + iy; }
};

/// Evaluates every cell independently (concurrently when workers > 1).
/// The result does not depend on the number of workers.
StabilityGrid scan(const ScanConfig& config);

struct CriteriaSelection {
  bool li_zhang = true;
  bool zhukovskii = true;
  bool burdina = true;
};

struct CriteriaGrid {
  Plane plane = Plane::Gamma;
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  CriteriaSelection selection;
  // Per cell, indexed like StabilityGrid; Inconclusive where not selected.
  std::vector<criteria::Outcome> li_zhang;
  std::vector<criteria::Outcome> zhukovskii;
  std::vector<criteria::Outcome> burdina;

  std::size_t index(std::size_t ix, std::size_t iy) const { return ix * y_axis.size() + iy; }
};

/// Verdicts of the sufficient criteria on every cell of a plane.
CriteriaGrid criteria_scan(Plane plane, const Axis& x, const Axis& y,
                           CriteriaSelection selection, unsigned workers = 1);

/// Exact first tongue U_1 of the gamma plane: (1, 1 + delta^2 / 2).
std::pair<double, double> first_tongue_gamma(double delta);

enum class StripVerdict { Stable, Unstable, Outside };
std::string_view to_string(StripVerdict v);

/// Stable for -delta^2/2 < gamma < 1, unstable for gamma < -delta^2/2.
StripVerdict stability_strip_gamma(double delta, double gamma);

/// Small-delta parabolas enclosing tongue U_ell (ell >= 2); the neglected
/// terms are O(delta^4).
std::pair<double, double> asymptotic_tongue_bounds(Plane plane, int ell, double delta);

struct TongueBoundarySample {
  int ell = 1;
  double delta = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct BracketOptions {
  double threshold = 2.0 - 1e-4;
  /// Parameter window to search. Required for ell >= 2 when delta > 0.5.
  std::optional<std::pair<double, double>> window;
  std::size_t samples = 400;
  double param_tol = 1e-6;
  double integrator_tol = 1e-11;
};

/// Locates the two crossings of |trace| = threshold around tongue ell along
/// fixed delta. Throws BracketNotFound if |trace| stays below the threshold
/// in the window, or if an edge of the tongue lies outside it.
TongueBoundarySample trace_level_bracket(Plane plane, int ell, double delta,
                                         const BracketOptions& opts = {});

enum class AsymptoticClass { UnstableAtInfinity, StableAtInfinity, Boundary };
std::string_view to_string(AsymptoticClass c);

/// Large-delta fate of omega: unstable on I_U = U_k ((k+1)(2k+1), (k+1)(2k+3)),
/// stable on I_S = U_k (k(2k+1), (k+1)(2k+1)); the shared endpoints are the
/// triangular numbers j(j+1)/2.
AsymptoticClass asymptotic_classification(double omega);

/// Tabulated minimum number of resonance lines crossed along delta in (0, inf)
/// for 0 < omega <= 7, omega != 1. Throws DomainError outside the table.
int crossing_count(double omega);

struct CrossingRecount {
  int crossings = 0;
  std::vector<double> locations;  // approximate delta of each crossing
};

/// Counts sign changes of |trace| - 2 along delta on a uniform grid, then
/// refines near-miss local extrema to catch tongues thinner than the step.
CrossingRecount count_crossings(double omega, double delta_lo, double delta_hi,
                                double step, double integrator_tol = 1e-11);

}  // namespace hd::tongues
