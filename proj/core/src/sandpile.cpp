#include "distinv/sandpile.hpp"

namespace distinv {

Multigraph::Multigraph(int n) : n_(n), mult_(n) {}

void Multigraph::add_edges(int u, int v, const mpz_class& count) {
  if (u == v) throw Error("multigraph loops are not supported");
  if (sgn(count) < 0) throw Error("negative edge multiplicity");
  mult_(u, v) += count;
  mult_(v, u) += count;
}

IntMatrix Multigraph::laplacian() const {
  IntMatrix l(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      l(u, v) = -mult_(u, v);
      l(u, u) += mult_(u, v);
    }
  }
  return l;
}

Multigraph cone_graph(const Graph& g) {
  if (g.complete()) throw Error("cone apex would be isolated: input is a complete graph");
  const DistanceProfile p = distance_profile(g);
  const int n = g.order();
  Multigraph h(n + 1);
  for (auto [u, v] : g.edges()) h.add_edges(u, v, 1);
  for (int v = 0; v < n; ++v) {
    const long excess = static_cast<long>(p.tr[static_cast<std::size_t>(v)] - p.deg[static_cast<std::size_t>(v)]);
    if (excess > 0) h.add_edges(v, n, excess);
  }
  return h;
}

SandpileResult sandpile_group(const Graph& g) {
  if (g.complete()) throw Error("cone apex would be isolated: input is a complete graph");
  SandpileResult r;
  r.atr_snf = snf(build(g, MatrixKind::Atr));
  r.group = cokernel(r.atr_snf);
  r.spanning_trees = r.atr_snf.zeros == 0 ? r.atr_snf.product() : mpz_class(0);
  return r;
}

CrossCheck cross_check(const Graph& g) {
  CrossCheck out;
  const Multigraph h = cone_graph(g);
  const IntMatrix lh = h.laplacian();
  const IntMatrix reduced = lh.minor_deleting(g.order());
  const IntMatrix atr = build(g, MatrixKind::Atr);
  bool ok = true;
  if (!(reduced == atr)) {
    ok = false;
    for (int i = 0; i < atr.size(); ++i) {
      for (int j = 0; j < atr.size(); ++j) {
        if (reduced(i, j) != atr(i, j)) {
          out.diagnostics.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + "): L^q(H) = " +
                                    reduced(i, j).get_str() + ", Atr = " + atr(i, j).get_str());
        }
      }
    }
  }
  SnfResult expected = snf(atr);
  expected.zeros += 1;
  const SnfResult full = snf(lh);
  if (!(full == expected)) {
    ok = false;
    out.diagnostics.push_back("SNF(L(H)) = " + full.to_string() + " but SNF(Atr) + (0) = " + expected.to_string());
  }
  out.ok = ok;
  return out;
}

}  // namespace distinv
