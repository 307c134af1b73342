#include "distinv/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace distinv {

namespace {

// Working copy with row/column operations on raw mpz storage.
class Workspace {
 public:
  explicit Workspace(const IntMatrix& m) : n_(m.size()), a_(static_cast<std::size_t>(n_ * n_)) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = m(i, j);
    }
  }

  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int size() const { return n_; }

  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < n_; ++j) std::swap(at(i, j), at(k, j));
  }
  void swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < n_; ++i) std::swap(at(i, j), at(i, k));
  }
  // row_i -= q * row_t, touching columns >= from.
  void sub_row(int i, int t, const mpz_class& q, int from) {
    for (int j = from; j < n_; ++j) mpz_submul(at(i, j).get_mpz_t(), q.get_mpz_t(), at(t, j).get_mpz_t());
  }
  void sub_col(int j, int t, const mpz_class& q, int from) {
    for (int i = from; i < n_; ++i) mpz_submul(at(i, j).get_mpz_t(), q.get_mpz_t(), at(i, t).get_mpz_t());
  }

 private:
  int n_;
  std::vector<mpz_class> a_;
};

}  // namespace

std::vector<mpz_class> SnfResult::diagonal() const {
  std::vector<mpz_class> d = factors;
  d.resize(factors.size() + static_cast<std::size_t>(zeros), mpz_class(0));
  return d;
}

mpz_class SnfResult::product() const {
  mpz_class p = 1;
  for (const auto& f : factors) p *= f;
  return p;
}

bool SnfResult::divisibility_chain_holds() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (sgn(factors[i]) <= 0) return false;
    if (i + 1 < factors.size() && !mpz_divisible_p(factors[i + 1].get_mpz_t(), factors[i].get_mpz_t())) return false;
  }
  return true;
}

std::string SnfResult::to_string() const {
  std::ostringstream out;
  out << '(';
  const auto d = diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i].get_str();
  out << ')';
  return out.str();
}

SnfResult SnfResult::from_diagonal(const std::vector<mpz_class>& diagonal) {
  SnfResult s;
  for (const auto& d : diagonal) {
    if (sgn(d) == 0) {
      ++s.zeros;
    } else {
      if (s.zeros != 0) throw Error("zero invariant factors must come last");
      s.factors.push_back(abs(d));
    }
  }
  return s;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  for (int k = degree(); k >= 0; --k) {
    out << coeffs[static_cast<std::size_t>(k)].get_str() << (k ? " " : "");
  }
  return out.str();
}

mpz_class AbelianGroup::torsion_order() const {
  mpz_class p = 1;
  for (const auto& d : torsion) p *= d;
  return p;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + d.get_str();
  }
  for (int i = 0; i < free_rank; ++i) {
    if (!out.empty()) out += " + ";
    out += "Z";
  }
  return out.empty() ? "0" : out;
}

SnfResult snf(const IntMatrix& m) {
  Workspace w(m);
  const int n = w.size();
  std::vector<mpz_class> diag;
  mpz_class q;

  for (int t = 0; t < n; ++t) {
    // Global minimal nonzero pivot in the trailing block.
    int pi = -1;
    int pj = -1;
    for (int i = t; i < n; ++i) {
      for (int j = t; j < n; ++j) {
        const auto& v = w.at(i, j);
        if (sgn(v) != 0 && (pi < 0 || mpz_cmpabs(v.get_mpz_t(), w.at(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (sgn(w.at(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.at(i, t).get_mpz_t(), w.at(t, t).get_mpz_t());
        w.sub_row(i, t, q, t);
        if (sgn(w.at(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (sgn(w.at(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.at(t, j).get_mpz_t(), w.at(t, t).get_mpz_t());
        w.sub_col(j, t, q, t);
        if (sgn(w.at(t, j)) != 0) clean = false;
      }
      if (clean) break;
      // Remainders are smaller than the pivot; bring the smallest forward.
      int best_i = t;
      int best_j = t;
      for (int i = t + 1; i < n; ++i) {
        if (sgn(w.at(i, t)) != 0 && mpz_cmpabs(w.at(i, t).get_mpz_t(), w.at(best_i, best_j).get_mpz_t()) < 0) {
          best_i = i;
          best_j = t;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (sgn(w.at(t, j)) != 0 && mpz_cmpabs(w.at(t, j).get_mpz_t(), w.at(best_i, best_j).get_mpz_t()) < 0) {
          best_i = t;
          best_j = j;
        }
      }
      w.swap_rows(t, best_i);
      w.swap_cols(t, best_j);
    }
    diag.push_back(abs(w.at(t, t)));
  }

  // diag(a, b) ~ diag(gcd, lcm); one sweep per position fixes the chain.
  mpz_class g;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (mpz_divisible_p(diag[j].get_mpz_t(), diag[i].get_mpz_t())) continue;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  }

  SnfResult s;
  s.factors = std::move(diag);
  s.zeros = n - s.rank();
  return s;
}

IntPolynomial charpoly(const IntMatrix& m) {
  const int n = m.size();
  // Coefficients highest degree first while iterating.
  std::vector<mpz_class> vec{1};
  if (n > 0) vec.push_back(-m(0, 0));

  std::vector<mpz_class> toeplitz;
  std::vector<mpz_class> v;
  std::vector<mpz_class> next_v;
  mpz_class dot;
  for (int r = 1; r < n; ++r) {
    // Leading r x r block A_r, row part R = m(r, 0..r-1), column part
    // C = m(0..r-1, r). Toeplitz column: 1, -m(r,r), -R C, -R A_r C, ...
    toeplitz.assign(static_cast<std::size_t>(r + 2), mpz_class(0));
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    v.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = m(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      dot = 0;
      for (int j = 0; j < r; ++j) mpz_addmul(dot.get_mpz_t(), m(r, j).get_mpz_t(), v[static_cast<std::size_t>(j)].get_mpz_t());
      toeplitz[static_cast<std::size_t>(k)] = -dot;
      if (k == r + 1) break;
      next_v.assign(static_cast<std::size_t>(r), mpz_class(0));
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          mpz_addmul(next_v[static_cast<std::size_t>(i)].get_mpz_t(), m(i, j).get_mpz_t(),
                     v[static_cast<std::size_t>(j)].get_mpz_t());
        }
      }
      v.swap(next_v);
    }
    // (r+2) x (r+1) lower-triangular Toeplitz product with vec.
    std::vector<mpz_class> out(static_cast<std::size_t>(r + 2), mpz_class(0));
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) {
        mpz_addmul(out[static_cast<std::size_t>(i)].get_mpz_t(), toeplitz[static_cast<std::size_t>(i - j)].get_mpz_t(),
                   vec[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
    vec.swap(out);
  }

  IntPolynomial p;
  p.coeffs.assign(vec.rbegin(), vec.rend());
  return p;
}

mpz_class determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  Workspace w(m);
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(w.at(k, k)) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(w.at(i, k)) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return 0;
      w.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // a_ij = (a_kk a_ij - a_ik a_kj) / prev, exact.
        mpz_class& aij = w.at(i, j);
        aij *= w.at(k, k);
        mpz_submul(aij.get_mpz_t(), w.at(i, k).get_mpz_t(), w.at(k, j).get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = w.at(k, k);
  }
  mpz_class det = w.at(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

int rank(const IntMatrix& m) { return snf(m).rank(); }

AbelianGroup cokernel(const SnfResult& s) {
  AbelianGroup group;
  for (const auto& f : s.factors) {
    if (f != 1) group.torsion.push_back(f);
  }
  group.free_rank = s.zeros;
  return group;
}

AbelianGroup cokernel(const IntMatrix& m) { return cokernel(snf(m)); }

std::vector<mpz_class> power_sums(const IntPolynomial& p, int count) {
  // Monic x^n + c_{n-1} x^{n-1} + ... ; e_k = (-1)^k c_{n-k}.
  const int n = p.degree();
  auto c = [&](int k) -> mpz_class {
    // coefficient of x^{n-k}
    if (k > n) return 0;
    return p.coeffs[static_cast<std::size_t>(n - k)];
  };
  std::vector<mpz_class> sums(static_cast<std::size_t>(count + 1), mpz_class(0));
  for (int k = 1; k <= count; ++k) {
    // p_k = -(k c_k + sum_{i=1}^{k-1} c_i p_{k-i})
    mpz_class acc = k * c(k);
    for (int i = 1; i < k; ++i) acc += c(i) * sums[static_cast<std::size_t>(k - i)];
    sums[static_cast<std::size_t>(k)] = -acc;
  }
  sums.erase(sums.begin());
  return sums;
}

}  // namespace distinv
