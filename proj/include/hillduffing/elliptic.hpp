#pragma once

// Complete elliptic integral of the first kind and the Jacobi elliptic
// functions sn, cn, dn for real argument and modulus 0 <= k < 1.

namespace hd::elliptic {

/// Elliptic modulus k with 0 <= k < 1. Throws DomainError otherwise.
class EllipticModulus {
 public:
  explicit EllipticModulus(double k);

  double value() const { return k_; }
  /// Complementary modulus k' = sqrt(1 - k^2).
  double complement() const;

 private:
  double k_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// K(k) = int_0^{pi/2} da / sqrt(1 - k^2 sin^2 a), by the arithmetic-geometric mean.
double complete_k(EllipticModulus k);
double complete_k(double k);

/// sn, cn, dn at (u, k) by descending Landen transformation.
///
/// The argument is first reduced modulo the real period 4K(k). NaN or
/// infinite u throws DomainError.
JacobiTriple jacobi(double u, EllipticModulus k);
JacobiTriple jacobi(double u, double k);

/// sigma = int_0^1 dt / sqrt(1 - t^4) = K(1/sqrt 2) / sqrt 2.
double sigma_constant();

}  // namespace hd::elliptic
