// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hillduffing/beam.hpp"
#include "hillduffing/criteria.hpp"
#include "hillduffing/duffing.hpp"
#include "hillduffing/elliptic.hpp"
#include "hillduffing/hill.hpp"
#include "hillduffing/io.hpp"
#include "hillduffing/tongues.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using hd::hill::Stability;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(g);
}

double trace_sq(double delta, double gamma) {
  return hd::hill::monodromy(hd::hill::squared_duffing_coefficient(delta, gamma), 1e-11).trace;
}

// 1 ----------------------------------------------------------------------
Outcome exact_lines() {
  Outcome o;
  const auto t0 = Clock::now();
  for (double d : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double a = trace_sq(d, 1.0);
    const double b = trace_sq(d, 1.0 + 0.5 * d * d);
    const double c = trace_sq(d, -0.5 * d * d);
    o.require(std::abs(a + 2) <= 1e-5, "gamma=1 at " + num(d) + ": " + num(a));
    o.require(std::abs(b + 2) <= 1e-5, "gamma=1+d^2/2 at " + num(d) + ": " + num(b));
    o.require(std::abs(c - 2) <= 1e-5, "gamma=-d^2/2 at " + num(d) + ": " + num(c));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < 5.0, "runtime " + num(secs) + " s");
  if (o.pass) o.detail = "15 traces within 1e-5, " + num(secs) + " s";
  return o;
}

// 2 ----------------------------------------------------------------------
Outcome gamma_zero() {
  Outcome o;
  const double bound = hd::criteria::li_zhang_bound();
  for (double d : {0.1, 1.0, 10.0, 100.0}) {
    const auto v = hd::criteria::li_zhang(hd::hill::squared_duffing_coefficient(d, 0.0));
    o.require(v.stable(), "li_zhang inconclusive at " + num(d));
    const double g = hd::criteria::g_function(d);
    o.require(bound - g > 0.0, "g(" + num(d) + ") = " + num(g) + " not below bound");
  }
  const double rel = std::abs(hd::criteria::g_function(1e6) / bound - 1.0);
  o.require(rel <= 1e-3, "g(1e6) relative gap " + num(rel));
  if (o.pass) o.detail = "g(1e6)/bound - 1 = " + num(-rel);
  return o;
}

// 3 ----------------------------------------------------------------------
Outcome sqrt2_line() {
  Outcome o;
  double worst = 0.0;
  for (double d : {0.5, 1.0, 3.0, 10.0}) {
    const double err = std::abs(hd::criteria::phi(d, 2 + d * d) - std::sqrt(2.0) * M_PI);
    worst = std::max(worst, err);
    o.require(err < 1e-9, "Phi error " + num(err) + " at " + num(d));
    o.require(hd::criteria::burdina_condition_gamma(d, 2 + d * d).stable(),
              "Burdina inconclusive at " + num(d));
  }
  if (o.pass) o.detail = "max |Phi - sqrt2 pi| = " + num(worst);
  return o;
}

// 4 ----------------------------------------------------------------------
Outcome psi_limits() {
  Outcome o;
  double worst_small = 0.0;
  double worst_large = 0.0;
  for (double w : {1.0, 2.0, 4.0}) {
    const double small = std::abs(hd::criteria::psi(1e-6, w) - M_PI * w);
    const double ref = M_PI * std::sqrt(w / 2);
    const double large = std::abs(hd::criteria::psi(1e4, w) - ref) / ref;
    o.require(small < 1e-5, "small-delta gap " + num(small) + " at omega " + num(w));
    o.require(large < 1e-2, "large-delta gap " + num(large) + " at omega " + num(w));
    worst_small = std::max(worst_small, small);
    worst_large = std::max(worst_large, large);
  }
  if (o.pass) o.detail = "max gaps " + num(worst_small) + " (small), " + num(worst_large) + " rel (large)";
  return o;
}

// 5 ----------------------------------------------------------------------
Outcome burdina_intervals() {
  Outcome o;
  std::vector<std::pair<double, double>> runs;
  bool inside = false;
  double prev = 0.0;
  for (int i = 1; i <= 10000; ++i) {
    const double d = 1e-3 * i;
    const bool s = hd::criteria::burdina_condition_omega(d, 4.0).stable();
    if (s && !inside) runs.push_back({d, d});
    if (!s && inside) runs.back().second = prev;
    inside = s;
    prev = d;
  }
  if (inside) runs.back().second = prev;
  o.require(runs.size() == 2, num(static_cast<double>(runs.size())) + " intervals");
  if (runs.size() == 2) {
    const double expect[4] = {0.0, 1.167, 1.277, 2.63};
    const double got[4] = {runs[0].first, runs[0].second, runs[1].first, runs[1].second};
    for (int k = 0; k < 4; ++k) {
      o.require(std::abs(got[k] - expect[k]) <= 0.005,
                "endpoint " + num(got[k]) + " vs " + num(expect[k]));
    }
    o.detail = "(" + num(got[0]) + ", " + num(got[1]) + ") U (" + num(got[2]) + ", " +
               num(got[3]) + ")" + (o.detail.empty() ? "" : "; " + o.detail);
  }
  return o;
}

// 6 ----------------------------------------------------------------------
Outcome beam_interval() {
  Outcome o;
  const auto t0 = Clock::now();
  const hd::beam::ModePair pair(1, 2);
  for (double d : {3.0, 3.2, 3.4}) {
    o.require(hd::beam::mode_stability(pair, d) == Stability::Unstable, num(d) + " not Unstable");
  }
  for (double d : {2.9, 3.5}) {
    o.require(hd::beam::mode_stability(pair, d) == Stability::Stable, num(d) + " not Stable");
  }
  auto unstable = [&](double d) {
    return hd::beam::mode_stability(pair, d) == Stability::Unstable;
  };
  auto edge = [&](double stable_side, double unstable_side) {
    while (std::abs(unstable_side - stable_side) > 1e-6) {
      const double mid = 0.5 * (stable_side + unstable_side);
      (unstable(mid) ? unstable_side : stable_side) = mid;
    }
    return 0.5 * (stable_side + unstable_side);
  };
  const double lo = edge(2.9, 3.0);
  const double hi = edge(3.5, 3.4);
  o.require(std::abs(lo - 2.93) <= 0.02, "lower edge " + num(lo));
  o.require(std::abs(hi - 3.45) <= 0.02, "upper edge " + num(hi));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < 60.0, "runtime " + num(secs) + " s");
  if (o.pass) o.detail = "unstable on (" + num(lo) + ", " + num(hi) + "), " + num(secs) + " s";
  return o;
}

// 7 ----------------------------------------------------------------------
Outcome coincidence() {
  Outcome o;
  const hd::beam::ModePair pair(1, 2);
  auto run = [&](double d) {
    hd::beam::SimulationConfig cfg;
    cfg.delta = d;
    return hd::beam::simulate(pair, cfg);
  };
  using V = hd::beam::InstabilityVerdict;
  o.require(run(2.92).verdict == V::NoTransferObserved, "2.92 transferred energy");
  std::vector<double> onset;
  for (double d : {2.94, 3.01, 3.44}) {
    const auto r = run(d);
    o.require(r.verdict == V::EnergyTransfer, num(d) + " showed no transfer");
    onset.push_back(r.onset_time.value_or(-1.0));
  }
  o.require(onset[2] > onset[1], "onset(3.44) = " + num(onset[2]) + " not after onset(3.01) = " +
                                     num(onset[1]));
  if (o.pass) {
    o.detail = "onsets " + num(onset[0]) + ", " + num(onset[1]) + ", " + num(onset[2]);
  }
  return o;
}

// 8 ----------------------------------------------------------------------
Outcome asymptotic_tongues() {
  Outcome o;
  using hd::tongues::Plane;
  const double d = 0.2;
  const double slack = 5 * std::pow(d, 4);
  for (Plane p : {Plane::Gamma, Plane::Omega}) {
    const auto [lo, hi] = hd::tongues::asymptotic_tongue_bounds(p, 2, d);
    try {
      const auto s = hd::tongues::trace_level_bracket(p, 2, d);
      const std::string name(hd::tongues::to_string(p));
      o.require(s.lower >= lo - slack && s.upper <= hi + slack,
                name + " bracket (" + num(s.lower) + ", " + num(s.upper) + ") outside (" +
                    num(lo - slack) + ", " + num(hi + slack) + ")");
      if (o.pass) {
        o.detail += (o.detail.empty() ? "" : ", ") + name + " (" + num(s.lower) + ", " +
                    num(s.upper) + ")";
      }
    } catch (const std::exception& e) {
      o.require(false, std::string(hd::tongues::to_string(p)) + ": " + e.what());
    }
  }
  return o;
}

// 9 ----------------------------------------------------------------------
Outcome large_delta() {
  Outcome o;
  const auto s = hd::tongues::trace_level_bracket(hd::tongues::Plane::Omega, 1, 50.0);
  o.require(std::abs(s.upper - 3.0) <= 0.1, "upper edge " + num(s.upper));
  hd::tongues::ScanConfig cfg;
  cfg.plane = hd::tongues::Plane::Omega;
  cfg.x = {0.1, 50.0, 60};
  cfg.y = {0.02, 0.98, 25};
  const auto grid = hd::tongues::scan(cfg);
  std::size_t bad = 0;
  for (auto c : grid.classification) bad += c == Stability::Stable ? 0 : 1;
  o.require(bad == 0, num(static_cast<double>(bad)) + " non-stable cells with omega < 1");
  if (o.pass) {
    o.detail = "upper edge " + num(s.upper) + ", " + num(static_cast<double>(grid.trace.size())) +
               " cells stable";
  }
  return o;
}

// 10 ---------------------------------------------------------------------
Outcome table_parity() {
  Outcome o;
  using C = hd::tongues::AsymptoticClass;
  for (double w : {0.5, 1.5, 2.0, 2.5, 3.5, 4.0, 4.5, 5.0, 5.5, 6.5, 7.0}) {
    const bool even = hd::tongues::crossing_count(w) % 2 == 0;
    const bool stable = hd::tongues::asymptotic_classification(w) == C::StableAtInfinity;
    o.require(even == stable, "parity mismatch at omega " + num(w));
  }
  std::string counts;
  for (auto [w, expected] : {std::pair{0.5, 0}, {1.5, 1}, {4.0, 4}}) {
    const auto r = hd::tongues::count_crossings(w, 1e-3, 10.0, 1e-3);
    o.require(r.crossings == expected, "omega " + num(w) + ": " + num(r.crossings) +
                                           " crossings, table " + num(expected));
    counts += (counts.empty() ? "" : ", ") + num(r.crossings);
  }
  if (o.pass) o.detail = "recounted " + counts;
  return o;
}

// 11 ---------------------------------------------------------------------
Outcome properties() {
  Outcome o;
  std::mt19937_64 g(20240611ULL);

  double jac = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform(g, -50, 50);
    const double k = uniform(g, 0.0, 0.71);
    const auto j = hd::elliptic::jacobi(u, k);
    jac = std::max({jac, std::abs(j.sn * j.sn + j.cn * j.cn - 1),
                    std::abs(j.dn * j.dn + k * k * j.sn * j.sn - 1)});
  }
  o.require(jac <= 1e-10, "Jacobi identity residual " + num(jac));

  double det = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double d = uniform(g, 0.01, 5.0);
    const double gam = uniform(g, -5.0, 10.0);
    det = std::max(det, hd::hill::monodromy(hd::hill::squared_duffing_coefficient(d, gam)).det_residual);
  }
  o.require(det <= 1e-8, "det residual " + num(det));

  int unsound = 0;
  for (int i = 0; i < 500; ++i) {
    const double d = uniform(g, 0.05, 5.0);
    const double gam = uniform(g, -1.0, 10.0);
    const auto p = hd::hill::squared_duffing_coefficient(d, gam);
    const bool claim = hd::criteria::li_zhang(p).stable() || hd::criteria::zhukovskii(p).stable() ||
                       hd::criteria::burdina(p).stable();
    if (claim && hd::hill::monodromy(p, 1e-11).classification == Stability::Unstable) ++unsound;
  }
  o.require(unsound == 0, num(unsound) + " unsound stability claims");

  double drift = 0.0;
  for (double d : {0.5, 2.0, 3.01}) {
    hd::beam::SimulationConfig cfg;
    cfg.delta = d;
    cfg.horizon = 100 * hd::duffing::period(hd::duffing::DuffingParams(d));
    drift = std::max(drift, hd::beam::simulate(hd::beam::ModePair(1, 2), cfg).max_energy_drift);
  }
  o.require(drift <= 1e-6, "energy drift " + num(drift));

  hd::tongues::ScanConfig cfg;
  cfg.plane = hd::tongues::Plane::Gamma;
  cfg.x = {0.0, 3.0, 20};
  cfg.y = {-2.0, 6.0, 40};
  std::ostringstream a;
  std::ostringstream b;
  hd::io::write_grid_csv(a, hd::tongues::scan(cfg));
  cfg.workers = 3;
  hd::io::write_grid_csv(b, hd::tongues::scan(cfg));
  o.require(a.str() == b.str(), "scan reruns differ");

  if (o.pass) {
    o.detail = "jacobi " + num(jac) + ", det " + num(det) + ", drift " + num(drift);
  }
  return o;
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {"exact resonant lines", exact_lines},
      {"gamma = 0 stability", gamma_zero},
      {"Phi(d, 2+d^2) = sqrt2 pi", sqrt2_line},
      {"Psi limits", psi_limits},
      {"Burdina intervals at omega = 4", burdina_intervals},
      {"beam instability interval", beam_interval},
      {"linear/nonlinear coincidence", coincidence},
      {"asymptotic tongues", asymptotic_tongues},
      {"large-delta limits", large_delta},
      {"crossing table parity", table_parity},
      {"property suites", properties},
  };
  int failed = 0;
  int n = 0;
  for (const auto& it : items) {
    ++n;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s  %2d  %-32s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", n, it.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
