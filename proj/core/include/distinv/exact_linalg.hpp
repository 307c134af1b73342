#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "distinv/matrix.hpp"

namespace distinv {

/// Smith normal form diag(f_1, ..., f_r, 0, ..., 0) of a square integer
/// matrix. factors holds the r positive invariant factors with
/// f_i | f_{i+1}; zeros = n - r.
struct SnfResult {
  std::vector<mpz_class> factors;
  int zeros = 0;

  int rank() const { return static_cast<int>(factors.size()); }
  int dimension() const { return rank() + zeros; }

  /// Full diagonal, zeros included.
  std::vector<mpz_class> diagonal() const;
  /// Product of the nonzero invariant factors.
  mpz_class product() const;
  bool divisibility_chain_holds() const;
  std::string to_string() const;

  /// Builds a result from a diagonal already in Smith form (zeros last).
  static SnfResult from_diagonal(const std::vector<mpz_class>& diagonal);

  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Characteristic polynomial det(xI - M). coeffs[k] is the coefficient of
/// x^k; coeffs.back() == 1.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class evaluate(const mpz_class& x) const;
  double evaluate(double x) const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Z_{d_1} + ... + Z_{d_k} + Z^free_rank with every d_i >= 2 and d_i | d_{i+1}.
struct AbelianGroup {
  std::vector<mpz_class> torsion;
  int free_rank = 0;

  mpz_class torsion_order() const;
  /// "Z_7 + Z_812", "Z_5 + Z", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Minimal-pivot elimination to a diagonal, followed by gcd/lcm repair of
/// the divisibility chain. Invariant factors are reported positive.
SnfResult snf(const IntMatrix& m);

/// Berkowitz's division-free algorithm; all arithmetic stays in Z.
IntPolynomial charpoly(const IntMatrix& m);

/// Fraction-free Bareiss elimination.
mpz_class determinant(const IntMatrix& m);

int rank(const IntMatrix& m);

AbelianGroup cokernel(const IntMatrix& m);
AbelianGroup cokernel(const SnfResult& s);

/// Power sums p_k = sum of k-th powers of the roots of a monic polynomial,
/// for k = 1..count, via Newton's identities.
std::vector<mpz_class> power_sums(const IntPolynomial& p, int count);

}  // namespace distinv
