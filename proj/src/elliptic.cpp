#include "hillduffing/elliptic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hillduffing/error.hpp"

namespace hd::elliptic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// AGM of (1, k'); K(k) = pi / (2 AGM(1, k')).
double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 4.0 * kEps * a) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

}  // namespace

EllipticModulus::EllipticModulus(double k) : k_(k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " +
                      std::to_string(k));
  }
}

double EllipticModulus::complement() const {
  return std::sqrt((1.0 - k_) * (1.0 + k_));
}

double complete_k(EllipticModulus k) {
  if (k.value() == 0.0) return 0.5 * std::numbers::pi;
  return 0.5 * std::numbers::pi / agm(1.0, k.complement());
}

double complete_k(double k) { return complete_k(EllipticModulus(k)); }

JacobiTriple jacobi(double u, EllipticModulus mod) {
  if (!std::isfinite(u)) throw DomainError("jacobi: argument must be finite");
  const double k = mod.value();
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};

  // Reduce to [-2K, 2K]; sn, cn, dn are 4K-periodic for real k.
  const double quarter = complete_k(mod);
  u = std::remainder(u, 4.0 * quarter);
  if (u == 0.0) return {0.0, 1.0, 1.0};

  // Descending Landen / AGM sequence with the stored a_n, b_n.
  constexpr int kMaxDepth = 16;
  std::array<double, kMaxDepth> am{};
  std::array<double, kMaxDepth> bm{};
  double a = 1.0;
  double b = mod.complement();
  double c = 0.0;
  int depth = 0;
  for (; depth < kMaxDepth; ++depth) {
    am[depth] = a;
    bm[depth] = b;
    c = 0.5 * (a + b);
    if (std::abs(a - b) <= 1e-8 * a) break;
    b = std::sqrt(a * b);
    a = c;
  }
  if (depth == kMaxDepth) depth = kMaxDepth - 1;

  u *= c;
  double sn = std::sin(u);
  double cn = std::cos(u);
  double dn = 1.0;
  if (sn != 0.0) {
    double ratio = cn / sn;
    c *= ratio;
    for (int i = depth; i >= 0; --i) {
      const double ai = am[i];
      ratio *= c;
      c *= dn;
      dn = (bm[i] + ratio) / (ai + ratio);
      ratio = c / ai;
    }
    const double s = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn >= 0.0 ? s : -s;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

JacobiTriple jacobi(double u, double k) { return jacobi(u, EllipticModulus(k)); }

double sigma_constant() {
  return complete_k(1.0 / std::numbers::sqrt2) / std::numbers::sqrt2;
}

}  // namespace hd::elliptic
