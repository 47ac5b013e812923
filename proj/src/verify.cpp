#include "hillduffing/verify.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "hillduffing/beam.hpp"
#include "hillduffing/criteria.hpp"
#include "hillduffing/duffing.hpp"
#include "hillduffing/elliptic.hpp"
#include "hillduffing/error.hpp"
#include "hillduffing/hill.hpp"
#include "hillduffing/tongues.hpp"

namespace hd::verify {

namespace {

using std::numbers::pi;

Check near(std::string name, double measured, double expected, double tol) {
  return {std::move(name), measured, expected, tol, std::abs(measured - expected) <= tol};
}

Check truth(std::string name, bool ok) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, ok};
}

std::string tag(std::string_view prefix, double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(prefix) + std::string(buf, r.ptr);
}

void elliptic_suite(std::vector<Check>& out) {
  using namespace elliptic;
  out.push_back(near("K(0) = pi/2", complete_k(0.0), 0.5 * pi, 1e-15));
  out.push_back(near("sigma", sigma_constant(), 1.3110287771460599, 1e-13));
  out.push_back(near("sqrt2 sigma = K(1/sqrt2)", std::numbers::sqrt2 * sigma_constant(),
                     complete_k(1.0 / std::numbers::sqrt2), 1e-13));
  for (double k : {0.3, 0.5, 0.7}) {
    const auto j = jacobi(complete_k(k), k);
    out.push_back(near(tag("sn(K) = 1, k=", k), j.sn, 1.0, 1e-12));
    out.push_back(near(tag("dn(K) = k', k=", k), j.dn, std::sqrt(1 - k * k), 1e-12));
  }
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double u = -40.0 + 1.7 * i;
    const double k = 0.01 + 0.014 * i;
    const auto j = jacobi(u, k);
    worst = std::max(worst, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
    worst = std::max(worst, std::abs(j.dn * j.dn - k * k * j.cn * j.cn - (1 - k * k)));
  }
  out.push_back(near("Jacobi identity residual", worst, 0.0, 1e-10));
  out.push_back(near("T(1e-8) -> 2 pi", duffing::period(duffing::DuffingParams(1e-8)), 2 * pi, 1e-7));
}

void exact_lines_suite(std::vector<Check>& out) {
  for (double d : {0.5, 1.0, 2.0}) {
    const double t1 = hill::monodromy(hill::squared_duffing_coefficient(d, 1.0)).trace;
    const double t2 =
        hill::monodromy(hill::squared_duffing_coefficient(d, 1.0 + 0.5 * d * d)).trace;
    const double t3 =
        hill::monodromy(hill::squared_duffing_coefficient(d, -0.5 * d * d)).trace;
    out.push_back(near(tag("trace on gamma=1, delta=", d), t1, -2.0, 1e-6));
    out.push_back(near(tag("trace on gamma=1+d^2/2, delta=", d), t2, -2.0, 1e-6));
    out.push_back(near(tag("trace on gamma=-d^2/2, delta=", d), t3, 2.0, 1e-6));
  }
  std::vector<double> ts;
  for (int i = 0; i < 50; ++i) ts.push_back(0.13 * i);
  using hill::ExactSolution;
  for (auto kind : {ExactSolution::CnAtGammaOne, ExactSolution::SnAtParabola,
                    ExactSolution::DnAtNegativeParabola}) {
    out.push_back(near("exact solution residual " + std::to_string(static_cast<int>(kind)),
                       hill::exact_solution_residual(kind, 1.3, ts), 0.0, 1e-9));
  }
}

void criteria_suite(std::vector<Check>& out) {
  using namespace criteria;
  for (double d : {0.5, 1.0, 3.0}) {
    out.push_back(near(tag("Phi(d, 2+d^2) = sqrt2 pi, delta=", d), phi(d, 2 + d * d),
                       std::numbers::sqrt2 * pi, 1e-9));
    out.push_back(truth(tag("Burdina stable on gamma=2+d^2, delta=", d),
                        burdina_condition_gamma(d, 2 + d * d).stable()));
  }
  for (double d : {0.1, 1.0, 10.0}) {
    out.push_back(truth(tag("Li-Zhang stable at gamma=0, delta=", d),
                        li_zhang(hill::squared_duffing_coefficient(d, 0.0)).stable()));
  }
  out.push_back(near("g(1e6) -> (64/3) sigma^4", g_function(1e6) / li_zhang_bound(), 1.0, 1e-3));
  out.push_back(truth("Burdina (0.5, 4) stable", burdina_condition_omega(0.5, 4).stable()));
  out.push_back(truth("Burdina (1.2, 4) inconclusive", !burdina_condition_omega(1.2, 4).stable()));
  out.push_back(near("Psi(1e-6, 4) -> 4 pi", psi(1e-6, 4.0), 4 * pi, 1e-5));
}

void tongues_suite(std::vector<Check>& out) {
  using namespace tongues;
  BracketOptions exact;
  exact.threshold = 2.0;
  const auto u1 = trace_level_bracket(Plane::Gamma, 1, 1.0, exact);
  out.push_back(near("U1 lower edge at delta=1", u1.lower, 1.0, 1e-4));
  out.push_back(near("U1 upper edge at delta=1", u1.upper, 1.5, 1e-4));
  out.push_back(truth("omega=2 unstable at infinity",
                      asymptotic_classification(2.0) == AsymptoticClass::UnstableAtInfinity));
  out.push_back(truth("omega=4 stable at infinity",
                      asymptotic_classification(4.0) == AsymptoticClass::StableAtInfinity));
  out.push_back(truth("omega=3 boundary", asymptotic_classification(3.0) == AsymptoticClass::Boundary));
  bool parity = true;
  for (double w : {0.5, 1.5, 2.0, 2.5, 3.5, 4.0, 4.5, 5.0, 5.5, 6.5, 7.0}) {
    const bool even = crossing_count(w) % 2 == 0;
    parity = parity && (even == (asymptotic_classification(w) == AsymptoticClass::StableAtInfinity));
  }
  out.push_back(truth("Table crossing parity matches I_S / I_U", parity));
  const beam::ModePair pair(1, 2);
  out.push_back(truth("(1,2) delta=3.0 unstable",
                      beam::mode_stability(pair, 3.0) == hill::Stability::Unstable));
  out.push_back(truth("(1,2) delta=2.9 stable",
                      beam::mode_stability(pair, 2.9) == hill::Stability::Stable));
}

void beam_suite(std::vector<Check>& out) {
  const beam::ModePair pair(1, 2);
  beam::SimulationConfig cfg;
  cfg.delta = 2.92;
  const auto calm = beam::simulate(pair, cfg);
  cfg.delta = 2.94;
  const auto unstable = beam::simulate(pair, cfg);
  out.push_back(truth("delta=2.92 no energy transfer",
                      calm.verdict == beam::InstabilityVerdict::NoTransferObserved));
  out.push_back(truth("delta=2.94 energy transfer",
                      unstable.verdict == beam::InstabilityVerdict::EnergyTransfer));
  out.push_back(near("energy drift delta=2.94", unstable.max_energy_drift, 0.0, 1e-6));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "elliptic") return Suite::Elliptic;
  if (name == "exact-lines") return Suite::ExactLines;
  if (name == "criteria") return Suite::Criteria;
  if (name == "tongues") return Suite::Tongues;
  if (name == "beam") return Suite::Beam;
  if (name == "all") return Suite::All;
  throw DomainError("unknown verification suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Elliptic: return "elliptic";
    case Suite::ExactLines: return "exact-lines";
    case Suite::Criteria: return "criteria";
    case Suite::Tongues: return "tongues";
    case Suite::Beam: return "beam";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<Check> run(Suite suite) {
  std::vector<Check> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Elliptic) elliptic_suite(out);
  if (all || suite == Suite::ExactLines) exact_lines_suite(out);
  if (all || suite == Suite::Criteria) criteria_suite(out);
  if (all || suite == Suite::Tongues) tongues_suite(out);
  if (all || suite == Suite::Beam) beam_suite(out);
  return out;
}

}  // namespace hd::verify
