#pragma once

// Brute-force reference implementations used only by the tests. None of
// them share code with the library routines they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "distinv/canonical.hpp"
#include "distinv/graph.hpp"
#include "distinv/graph6.hpp"
#include "distinv/matrix.hpp"

namespace distinv::oracle {

using Dense = std::vector<std::vector<mpz_class>>;

inline Dense dense(const IntMatrix& m) {
  Dense d(static_cast<std::size_t>(m.size()), std::vector<mpz_class>(static_cast<std::size_t>(m.size())));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

/// Leibniz formula, sum over all permutations. Fine for n <= 7.
inline mpz_class leibniz_det(const Dense& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    mpz_class term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
    total += inversions % 2 ? mpz_class(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Delta_k = gcd of all k x k minors, k = 1..n (Delta_0 = 1 omitted).
inline std::vector<mpz_class> minor_gcds(const IntMatrix& m) {
  const Dense a = dense(m);
  const int n = m.size();
  std::vector<mpz_class> out;
  for (int k = 1; k <= n; ++k) {
    mpz_class g = 0;
    const auto sets = subsets(n, k);
    for (const auto& rows : sets) {
      for (const auto& cols : sets) {
        Dense sub(static_cast<std::size_t>(k), std::vector<mpz_class>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(leibniz_det(sub)).get_mpz_t());
      }
    }
    out.push_back(g);
  }
  return out;
}

/// Invariant factors f_k = Delta_k / Delta_{k-1}, zeros where Delta_k = 0.
inline std::vector<mpz_class> invariant_factors_from_minors(const IntMatrix& m) {
  const auto deltas = minor_gcds(m);
  std::vector<mpz_class> f;
  mpz_class prev = 1;
  for (const auto& d : deltas) {
    if (d == 0) {
      f.emplace_back(0);
      continue;
    }
    f.push_back(d / prev);
    prev = d;
  }
  return f;
}

// Polynomials as ascending coefficient vectors.
using Poly = std::vector<mpz_class>;

inline Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

inline Poly poly_add(Poly p, const Poly& q, int sign) {
  if (p.size() < q.size()) p.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += sign * q[i];
  return p;
}

/// det of a matrix of polynomials by first-row cofactor expansion.
inline Poly poly_det(const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {1};
  if (n == 1) return a[0][0];
  Poly total{0};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[i][j]);
      }
      minor.push_back(std::move(row));
    }
    total = poly_add(total, poly_mul(a[0][c], poly_det(minor)), c % 2 ? -1 : 1);
  }
  return total;
}

/// det(xI - M) by symbolic cofactor expansion; ascending coefficients.
inline Poly cofactor_charpoly(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = i == j ? Poly{-m(i, j), 1} : Poly{-m(i, j)};
  }
  Poly p = poly_det(a);
  while (p.size() > static_cast<std::size_t>(n + 1)) p.pop_back();
  return p;
}

/// Free trees on n vertices by leaf addition and certificate dedupe.
inline std::set<std::string> tree_certificates_by_leaf_addition(int n) {
  std::set<std::string> level{certificate(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> next;
    for (const auto& cert : level) {
      // graph6 decoding is tested on its own; reusing it here is fine
      const Graph base = parse_graph6(cert);
      for (int v = 0; v < k - 1; ++v) {
        Graph g(k);
        for (auto [a, b] : base.edges()) g.add_edge(a, b);
        g.add_edge(v, k - 1);
        next.insert(certificate(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Random relabeling of g.
inline Graph shuffled(const Graph& g, std::mt19937_64& rng, std::vector<int>* perm_out = nullptr) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  if (perm_out) *perm_out = perm;
  return g.permuted(perm);
}

/// Connected random graph with edge probability p (rejection sampling).
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (g.connected()) return g;
  }
}

}  // namespace distinv::oracle
