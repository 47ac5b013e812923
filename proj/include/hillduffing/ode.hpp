#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "hillduffing/error.hpp"

namespace hd::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct StepControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  std::size_t max_steps = 10'000'000;
  double initial_step = 0.0;  // 0 picks 1e-3 of the interval
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, the embedded error weights.
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                        e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace detail

/// Integrates y' = f(t, y) from t0 to t1 (t1 > t0) with an adaptive
/// Dormand-Prince 5(4) pair and FSAL stages.
///
/// `observe(t, y)` is called after every accepted step and may return false
/// to stop early; the final time reached is returned. The last step is
/// clipped so that t1 is hit exactly.
template <std::size_t N, class Rhs, class Observer>
double integrate(Rhs&& f, State<N>& y, double t0, double t1,
                 const StepControl& ctl, Observer&& observe,
                 IntegrationStats* stats = nullptr) {
  using namespace detail;
  IntegrationStats local;
  IntegrationStats& st = stats ? *stats : local;
  if (!(t1 > t0)) return t0;

  const double span = t1 - t0;
  double h = ctl.initial_step > 0.0 ? ctl.initial_step : 1e-3 * span;
  double t = t0;

  State<N> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  k1 = f(t, y);
  ++st.rhs_evaluations;

  auto axpy = [&](std::initializer_list<std::pair<double, const State<N>*>> terms) {
    for (std::size_t i = 0; i < N; ++i) {
      double s = y[i];
      for (const auto& [c, k] : terms) s += h * c * (*k)[i];
      tmp[i] = s;
    }
  };

  constexpr double safety = 0.9, fac_min = 0.2, fac_max = 5.0;
  double err_prev = 1e-4;
  bool last_rejected = false;

  while (t < t1) {
    if (st.accepted + st.rejected >= ctl.max_steps) {
      throw IntegrationFailure("step cap of " + std::to_string(ctl.max_steps) +
                               " reached at t = " + std::to_string(t));
    }
    bool final_step = false;
    if (t + h >= t1) {
      h = t1 - t;
      final_step = true;
    }
    if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      throw IntegrationFailure("step size underflow at t = " + std::to_string(t));
    }

    axpy({{a21, &k1}});
    k2 = f(t + c2 * h, tmp);
    axpy({{a31, &k1}, {a32, &k2}});
    k3 = f(t + c3 * h, tmp);
    axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}});
    k4 = f(t + c4 * h, tmp);
    axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    k5 = f(t + c5 * h, tmp);
    axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    k6 = f(t + h, tmp);
    axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    ynew = tmp;
    const double tnew = final_step ? t1 : t + h;
    k7 = f(tnew, ynew);
    st.rhs_evaluations += 6;

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = ctl.abs_tol +
                        ctl.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / static_cast<double>(N));

    if (!std::isfinite(err)) {
      ++st.rejected;
      h *= fac_min;
      last_rejected = true;
      continue;
    }

    if (err <= 1.0) {
      ++st.accepted;
      t = tnew;
      y = ynew;
      k1 = k7;
      if (!observe(t, static_cast<const State<N>&>(y))) return t;
      // PI step-size controller (Gustafsson).
      double fac = safety * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
                   std::pow(err_prev, 0.4 / 5.0);
      fac = std::clamp(fac, fac_min, last_rejected ? 1.0 : fac_max);
      err_prev = std::max(err, 1e-4);
      last_rejected = false;
      if (!final_step) h *= fac;
    } else {
      ++st.rejected;
      h *= std::max(fac_min, safety * std::pow(err, -1.0 / 5.0));
      last_rejected = true;
    }
  }
  return t;
}

template <std::size_t N, class Rhs>
double integrate(Rhs&& f, State<N>& y, double t0, double t1,
                 const StepControl& ctl, IntegrationStats* stats = nullptr) {
  return integrate<N>(std::forward<Rhs>(f), y, t0, t1, ctl,
                      [](double, const State<N>&) { return true; }, stats);
}

}  // namespace hd::ode
