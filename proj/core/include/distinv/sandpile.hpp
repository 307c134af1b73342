#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "distinv/exact_linalg.hpp"
#include "distinv/graph.hpp"
#include "distinv/matrix.hpp"

namespace distinv {

/// Undirected multigraph as a symmetric multiplicity matrix with zero
/// diagonal.
class Multigraph {
 public:
  explicit Multigraph(int n);

  int order() const { return n_; }
  const mpz_class& multiplicity(int u, int v) const { return mult_(u, v); }
  void add_edges(int u, int v, const mpz_class& count);

  /// Degree (sum of multiplicities) on the diagonal, -multiplicity off it.
  IntMatrix laplacian() const;

 private:
  int n_;
  IntMatrix mult_;
};

/// G plus an apex vertex q (index n) joined to each v by tr(v) - deg(v)
/// parallel edges. Rejects complete graphs, whose apex would be isolated.
Multigraph cone_graph(const Graph& g);

struct SandpileResult {
  AbelianGroup group;
  mpz_class spanning_trees;  // of the cone multigraph, not of g
  SnfResult atr_snf;
};

/// Sandpile group of the cone multigraph, read off SNF(Atr(g)).
SandpileResult sandpile_group(const Graph& g);

struct CrossCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

/// Confirms that deleting the apex row and column of L(H) gives Atr(g) and
/// that SNF(L(H)) equals SNF(Atr(g)) followed by one zero.
CrossCheck cross_check(const Graph& g);

}  // namespace distinv
