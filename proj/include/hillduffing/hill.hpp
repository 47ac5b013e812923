#pragma once

// Floquet analysis of the Hill equation  xi'' + p(t) xi = 0  with a periodic
// coefficient p. The monodromy matrix is the principal fundamental matrix
// at t = period; stability is read off its trace.

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

namespace hd::hill {

struct PeriodicCoefficient {
  std::function<double(double)> eval;
  double period = 0.0;  // least period T
  std::optional<double> analytic_min;
  std::optional<double> analytic_max;
  bool single_extremum_pair = false;  // unique max and unique min per period

  double operator()(double t) const { return eval(t); }
};

enum class Stability { Stable, Unstable, Boundary };

std::string_view to_string(Stability s);

/// Classifies |trace| against `level`, with an indifference band of
/// half-width `band` around it.
struct Classifier {
  double level = 2.0;
  double band = 1e-4;

  Stability operator()(double trace) const;
};

struct MonodromyOptions {
  double tol = 1e-10;  // absolute and relative integrator tolerance
  std::size_t max_steps = 10'000'000;
  Classifier classifier{};
};

struct MonodromyReport {
  std::array<std::array<double, 2>, 2> matrix{};
  double trace = 0.0;
  std::array<std::complex<double>, 2> multipliers{};
  Stability classification = Stability::Boundary;
  double det_residual = 0.0;  // |det(matrix) - 1|
  std::size_t steps = 0;
};

/// p(t) = gamma + y(t)^2 with y the Duffing solution of amplitude delta.
/// Period T(delta)/2, min gamma, max gamma + delta^2.
PeriodicCoefficient squared_duffing_coefficient(double delta, double gamma);

/// p(t) = omega + Theta_omega(t)^2, period T_omega(delta)/2.
PeriodicCoefficient omega_coefficient(double delta, double omega);

/// p(t) = a + 2 q cos(2t), period pi.
PeriodicCoefficient mathieu_coefficient(double a, double q);

/// Integrates both canonical solutions over one period and assembles the
/// monodromy matrix. Throws IntegrationFailure.
MonodromyReport monodromy(const PeriodicCoefficient& p, const MonodromyOptions& opts);
MonodromyReport monodromy(const PeriodicCoefficient& p, double tol = 1e-10);

/// Multipliers (tr +- sqrt(tr^2 - 4)) / 2 of a unimodular 2x2 matrix.
std::array<std::complex<double>, 2> multipliers_from_trace(double trace);

/// Trace of the monodromy matrix of xi'' + c xi = 0 over a period P.
double constant_coefficient_trace(double c, double period);

enum class ExactSolution {
  CnAtGammaOne,          // xi = cn(s t), gamma = 1
  SnAtParabola,          // xi = sn(s t), gamma = 1 + delta^2 / 2
  DnAtNegativeParabola,  // xi = dn(s t), gamma = -delta^2 / 2
};

/// Gamma value on which the given Jacobi function solves the squared-Duffing Hill equation.
double exact_solution_gamma(ExactSolution kind, double delta);

/// max over t of |xi'' + (gamma + y^2) xi| with xi'' from the Jacobi
/// derivative identities, s = sqrt(1 + delta^2).
double exact_solution_residual(ExactSolution kind, double delta,
                               std::span<const double> t_samples);

}  // namespace hd::hill
