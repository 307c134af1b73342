#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "distinv/graph.hpp"

namespace distinv {

/// The graph matrices the library can build.
///   L = deg - A        Q = deg + A
///   DL = tr - D        DQ = tr + D
///   Atr = tr - A       AtrPlus = tr + A
///   Ddeg = deg - D     DdegPlus = deg + D
///   R = tr - deg (diagonal)
enum class MatrixKind { A, L, Q, D, DL, DQ, Atr, AtrPlus, Ddeg, DdegPlus, R };

inline constexpr std::array<MatrixKind, 11> kAllMatrixKinds = {
    MatrixKind::A,   MatrixKind::L,       MatrixKind::Q,    MatrixKind::D,        MatrixKind::DL, MatrixKind::DQ,
    MatrixKind::Atr, MatrixKind::AtrPlus, MatrixKind::Ddeg, MatrixKind::DdegPlus, MatrixKind::R};

/// Kinds that take part in censuses (everything except R).
inline constexpr std::array<MatrixKind, 10> kCensusMatrixKinds = {
    MatrixKind::A,   MatrixKind::L,       MatrixKind::Q,    MatrixKind::D,       MatrixKind::DL,
    MatrixKind::DQ,  MatrixKind::Atr,     MatrixKind::AtrPlus, MatrixKind::Ddeg, MatrixKind::DdegPlus};

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

/// True for kinds whose entries depend on distances or transmissions.
bool needs_distances(MatrixKind kind);

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<mpz_class>& d);

  int size() const { return n_; }

  mpz_class& operator()(int i, int j) { return a_[index(i, j)]; }
  const mpz_class& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool symmetric() const;
  mpz_class trace() const;
  mpz_class max_norm() const;  // largest absolute entry

  IntMatrix operator-() const;
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y);

  /// Entry (perm[i], perm[j]) of the result is entry (i, j) of *this.
  IntMatrix permuted(const std::vector<int>& perm) const;

  /// Removes row and column k.
  IntMatrix minor_deleting(int k) const;

  std::vector<double> to_doubles() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<mpz_class> a_;
};

/// Builds the matrix of g. Distance-based kinds require a connected graph.
IntMatrix build(const Graph& g, MatrixKind kind);

/// Same, reusing a precomputed profile of g.
IntMatrix build(const Graph& g, MatrixKind kind, const DistanceProfile& profile);

std::vector<mpz_class> row_sums(const IntMatrix& m);

}  // namespace distinv
