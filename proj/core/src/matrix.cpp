#include "distinv/matrix.hpp"

#include <string>

namespace distinv {

namespace {

constexpr std::array<std::string_view, 11> kNames = {"A",   "L",       "Q",    "D",        "DL", "DQ",
                                                     "Atr", "AtrPlus", "Ddeg", "DdegPlus", "R"};

void require_same_size(const IntMatrix& x, const IntMatrix& y) {
  if (x.size() != y.size()) throw Error("matrix size mismatch");
}

}  // namespace

std::string_view to_string(MatrixKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<MatrixKind>(i);
  }
  return std::nullopt;
}

bool needs_distances(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::A:
    case MatrixKind::L:
    case MatrixKind::Q:
      return false;
    default:
      return true;
  }
}

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 0) throw Error("negative matrix size");
  a_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw Error("IntMatrix rows must form a square");
    int j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

bool IntMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

mpz_class IntMatrix::max_norm() const {
  mpz_class best = 0;
  for (const auto& v : a_) {
    if (mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(v);
  }
  return best;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
  return out;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  require_same_size(x, y);
  IntMatrix out(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
  return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  require_same_size(x, y);
  IntMatrix out(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] - y.a_[k];
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  require_same_size(x, y);
  const int n = x.n_;
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const mpz_class& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (int j = 0; j < n; ++j) mpz_addmul(out(i, j).get_mpz_t(), xik.get_mpz_t(), y(k, j).get_mpz_t());
    }
  }
  return out;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

IntMatrix IntMatrix::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = (*this)(i, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::minor_deleting(int k) const {
  if (k < 0 || k >= n_) throw Error("row index out of range");
  IntMatrix out(n_ - 1);
  for (int i = 0, oi = 0; i < n_; ++i) {
    if (i == k) continue;
    for (int j = 0, oj = 0; j < n_; ++j) {
      if (j == k) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

std::vector<double> IntMatrix::to_doubles() const {
  std::vector<double> out(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].get_d();
  return out;
}

IntMatrix build(const Graph& g, MatrixKind kind, const DistanceProfile& profile) {
  const int n = g.order();
  if (profile.n != n) throw Error("distance profile does not match graph");
  IntMatrix m(n);
  auto tr = [&](int u) { return static_cast<long>(profile.tr[static_cast<std::size_t>(u)]); };
  auto deg = [&](int u) { return static_cast<long>(g.degree(u)); };
  auto dist = [&](int u, int v) { return static_cast<long>(profile.at(u, v)); };
  auto adj = [&](int u, int v) { return g.adjacent(u, v) ? 1L : 0L; };

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const bool diag = u == v;
      long value = 0;
      switch (kind) {
        case MatrixKind::A: value = adj(u, v); break;
        case MatrixKind::L: value = diag ? deg(u) : -adj(u, v); break;
        case MatrixKind::Q: value = diag ? deg(u) : adj(u, v); break;
        case MatrixKind::D: value = dist(u, v); break;
        case MatrixKind::DL: value = diag ? tr(u) : -dist(u, v); break;
        case MatrixKind::DQ: value = diag ? tr(u) : dist(u, v); break;
        case MatrixKind::Atr: value = diag ? tr(u) : -adj(u, v); break;
        case MatrixKind::AtrPlus: value = diag ? tr(u) : adj(u, v); break;
        case MatrixKind::Ddeg: value = diag ? deg(u) : -dist(u, v); break;
        case MatrixKind::DdegPlus: value = diag ? deg(u) : dist(u, v); break;
        case MatrixKind::R: value = diag ? tr(u) - deg(u) : 0; break;
      }
      m(u, v) = value;
    }
  }
  return m;
}

IntMatrix build(const Graph& g, MatrixKind kind) {
  if (!needs_distances(kind)) {
    // Adjacency-only kinds never look at the profile.
    DistanceProfile empty;
    empty.n = g.order();
    return build(g, kind, empty);
  }
  return build(g, kind, distance_profile(g));
}

std::vector<mpz_class> row_sums(const IntMatrix& m) {
  std::vector<mpz_class> out(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out[static_cast<std::size_t>(i)] += m(i, j);
  }
  return out;
}

}  // namespace distinv
