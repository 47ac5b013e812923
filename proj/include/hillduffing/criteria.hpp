#pragma once

// Sufficient stability criteria for the Hill equation (Li-Zhang L^2
// Lyapunov-type bound, Zhukovskii, Burdina) and their closed-form
// reductions for Duffing-squared coefficients.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hillduffing/hill.hpp"

namespace hd::criteria {

enum class Criterion { LiZhang, Zhukovskii, Burdina };
enum class Outcome { GuaranteedStable, Inconclusive };

std::string_view to_string(Criterion c);
std::string_view to_string(Outcome o);

struct CriterionVerdict {
  Criterion criterion = Criterion::LiZhang;
  Outcome outcome = Outcome::Inconclusive;
  std::optional<unsigned> witness_ell;
  std::map<std::string, double> quantities;
  std::string reason;  // set when a precondition fails

  bool stable() const { return outcome == Outcome::GuaranteedStable; }
};

/// Strict inequalities are required to hold by at least this much.
inline constexpr double kStrictMargin = 1e-10;

/// T^3 int_0^T p^2 < (64/3) sigma^4, p >= 0.
CriterionVerdict li_zhang(const hill::PeriodicCoefficient& p);

/// l^2 pi^2 / T^2 <= p <= (l+1)^2 pi^2 / T^2 for some l >= 0.
CriterionVerdict zhukovskii(const hill::PeriodicCoefficient& p);

/// l pi < A - B and A + B < (l+1) pi with A = int_0^T sqrt(p),
/// B = log(max p / min p) / 2; p > 0 with a single max and min per period.
CriterionVerdict burdina(const hill::PeriodicCoefficient& p);

/// Phi(delta, gamma) = 2 sqrt 2 int_0^{pi/2} sqrt((gamma + d^2 s^2) / (2 + d^2 + d^2 s^2)),
/// s = sin(theta). Equals int_0^{T/2} sqrt(gamma + y^2) dt.
double phi(double delta, double gamma);

/// Psi(delta, omega) = 2 sqrt(2 omega) int_0^{pi/2} sqrt((omega + d^2 s^2) / (2 + d^2 + d^2 s^2)).
double psi(double delta, double omega);

/// Burdina test for gamma + y^2 in closed form:
/// log(1 + d^2/gamma) < 2 min{Phi - l pi, (l+1) pi - Phi}, l = floor(Phi / pi).
CriterionVerdict burdina_condition_gamma(double delta, double gamma);

/// Same test for omega + Theta_omega^2, with Psi and log(1 + d^2/omega).
CriterionVerdict burdina_condition_omega(double delta, double omega);

/// g(delta) = (T^3/8) int_0^{T/2} y^4 dt, written as a product of two
/// integrals over [0, pi/2]. Increasing, with supremum (64/3) sigma^4.
double g_function(double delta);

/// (64/3) sigma^4, the Li-Zhang bound.
double li_zhang_bound();

}  // namespace hd::criteria
