#include "hillduffing/beam.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hillduffing/duffing.hpp"
#include "hillduffing/error.hpp"
#include "hillduffing/ode.hpp"

namespace hd::beam {

ModePair::ModePair(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1 || m == n) {
    throw DomainError("mode pair needs m, n >= 1 and m != n (got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ")");
  }
  omega_ = static_cast<double>(n) * n / (static_cast<double>(m) * m);
}

std::array<double, 4> coupled_rhs(const ModePair& pair, const BeamState& s) {
  const double m2 = static_cast<double>(pair.m()) * pair.m();
  const double n2 = static_cast<double>(pair.n()) * pair.n();
  const double stretch = m2 * s.w * s.w + n2 * s.z * s.z;
  return {s.w_dot, -m2 * m2 * s.w - m2 * stretch * s.w,
          s.z_dot, -n2 * n2 * s.z - n2 * stretch * s.z};
}

double energy(const ModePair& pair, const BeamState& s) {
  const double m2 = static_cast<double>(pair.m()) * pair.m();
  const double n2 = static_cast<double>(pair.n()) * pair.n();
  const double stretch = m2 * s.w * s.w + n2 * s.z * s.z;
  return 0.5 * s.w_dot * s.w_dot + 0.5 * s.z_dot * s.z_dot + 0.5 * m2 * m2 * s.w * s.w +
         0.5 * n2 * n2 * s.z * s.z + 0.25 * stretch * stretch;
}

std::string_view to_string(InstabilityVerdict v) {
  return v == InstabilityVerdict::EnergyTransfer ? "EnergyTransfer" : "NoTransferObserved";
}

double default_horizon(const ModePair& pair, double delta) {
  return 50.0 * duffing::period(duffing::DuffingParams(delta, pair.omega()));
}

SimulationResult simulate(const ModePair& pair, const SimulationConfig& config) {
  if (config.delta == 0.0 || !std::isfinite(config.delta)) {
    throw DomainError("simulate needs delta != 0");
  }
  if (!(config.z_ratio > 0.0 && config.z_ratio <= 0.1)) {
    throw DomainError("simulate needs z_ratio in (0, 0.1]");
  }
  const double horizon = config.horizon.value_or(default_horizon(pair, config.delta));
  if (!(horizon > 0.0)) throw DomainError("simulate needs a positive horizon");
  if (config.samples < 2) throw DomainError("simulate needs at least 2 trajectory samples");

  SimulationResult out;
  out.horizon = horizon;
  const double z0 = config.z_ratio * config.delta;
  const double threshold = config.growth_factor * std::abs(z0);
  BeamState start{config.delta, 0.0, z0, 0.0, 0.0};
  const double e0 = energy(pair, start);

  auto rhs = [&pair](double, const ode::State<4>& y) {
    return coupled_rhs(pair, BeamState{y[0], y[1], y[2], y[3], 0.0});
  };
  ode::StepControl ctl;
  ctl.rel_tol = config.tol;
  ctl.abs_tol = config.tol;

  ode::State<4> y{start.w, start.w_dot, start.z, start.z_dot};
  out.trajectory.reserve(config.samples);
  out.trajectory.push_back(start);
  double max_z = std::abs(z0);

  auto observe = [&](double t, const ode::State<4>& s) {
    const double az = std::abs(s[2]);
    max_z = std::max(max_z, az);
    if (!out.onset_time && az > threshold) out.onset_time = t;
    const BeamState b{s[0], s[1], s[2], s[3], t};
    out.max_energy_drift = std::max(out.max_energy_drift, std::abs(energy(pair, b) - e0) / e0);
    return true;
  };

  // Step output to output, so each exported sample is an exact integrator node.
  double t = 0.0;
  double h_hint = 0.0;
  for (std::size_t i = 1; i < config.samples; ++i) {
    const double t_next = i + 1 == config.samples
                              ? horizon
                              : horizon * static_cast<double>(i) /
                                    static_cast<double>(config.samples - 1);
    ctl.initial_step = h_hint > 0.0 ? std::min(h_hint, t_next - t) : 0.0;
    ode::integrate<4>(rhs, y, t, t_next, ctl, observe);
    h_hint = t_next - t;
    t = t_next;
    out.trajectory.push_back(BeamState{y[0], y[1], y[2], y[3], t});
  }

  out.max_z_growth = max_z / std::abs(z0);
  out.verdict = out.onset_time ? InstabilityVerdict::EnergyTransfer
                               : InstabilityVerdict::NoTransferObserved;
  return out;
}

hill::MonodromyReport mode_monodromy(const ModePair& pair, double delta,
                                     const hill::MonodromyOptions& opts) {
  return hill::monodromy(hill::omega_coefficient(delta, pair.omega()), opts);
}

hill::Stability mode_stability(const ModePair& pair, double delta,
                               const hill::MonodromyOptions& opts) {
  return mode_monodromy(pair, delta, opts).classification;
}

}  // namespace hd::beam
