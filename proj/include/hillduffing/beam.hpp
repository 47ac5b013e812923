#pragma once

// Two-mode truncation u = w(t) sin(m x) + z(t) sin(n x) of the hinged
// nonlinear beam  u_tt + u_xxxx - (2/pi) |u_x|^2 u_xx = 0.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hillduffing/hill.hpp"

namespace hd::beam {

class ModePair {
 public:
  /// m, n >= 1 and n != m; throws DomainError otherwise.
  ModePair(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// n^2 / m^2.
  double omega() const { return omega_; }

 private:
  int m_;
  int n_;
  double omega_;
};

struct BeamState {
  double w = 0.0;
  double w_dot = 0.0;
  double z = 0.0;
  double z_dot = 0.0;
  double t = 0.0;
};

/// (w', w'', z', z'').
std::array<double, 4> coupled_rhs(const ModePair& pair, const BeamState& s);

/// Hamiltonian of the coupled system.
double energy(const ModePair& pair, const BeamState& s);

enum class InstabilityVerdict { EnergyTransfer, NoTransferObserved };
std::string_view to_string(InstabilityVerdict v);

struct SimulationConfig {
  double delta = 1.0;
  double z_ratio = 1e-3;            // z(0) = z_ratio * delta
  std::optional<double> horizon;    // default 50 T_omega(delta)
  double tol = 1e-11;
  double growth_factor = 20.0;      // transfer once |z| > growth_factor * z(0)
  std::size_t samples = 4096;       // trajectory points kept for export
};

struct SimulationResult {
  std::vector<BeamState> trajectory;  // uniform in t, includes both ends
  InstabilityVerdict verdict = InstabilityVerdict::NoTransferObserved;
  std::optional<double> onset_time;   // first step with |z| above threshold
  double horizon = 0.0;
  double max_z_growth = 0.0;          // max |z(t)| / |z(0)|
  double max_energy_drift = 0.0;      // max relative deviation from E(0)
};

/// Integrates from (w, w', z, z') = (delta, 0, z_ratio delta, 0).
/// Throws IntegrationFailure on step underflow.
SimulationResult simulate(const ModePair& pair, const SimulationConfig& config);

/// Default horizon 50 T_omega(delta).
double default_horizon(const ModePair& pair, double delta);

/// Linear stability of the pure mode (Theta_m, 0) with respect to mode n:
/// monodromy of xi'' + (omega + Theta_omega^2) xi = 0.
hill::MonodromyReport mode_monodromy(const ModePair& pair, double delta,
                                     const hill::MonodromyOptions& opts = {});
hill::Stability mode_stability(const ModePair& pair, double delta,
                               const hill::MonodromyOptions& opts = {});

}  // namespace hd::beam
