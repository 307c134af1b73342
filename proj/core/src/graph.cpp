#include "distinv/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace distinv {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw Error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
  }
}

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error("graph order must lie in [0, 64], got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::degree(int u) const { return std::popcount(row(u)); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
  Graph out(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t r = row(u);
    std::uint64_t mapped = 0;
    while (r != 0) {
      int v = std::countr_zero(r);
      r &= r - 1;
      mapped |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
    }
    out.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = mapped;
  }
  return out;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= row(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask(n_);
}

bool Graph::complete() const {
  for (int u = 0; u < n_; ++u) {
    if (degree(u) != n_ - 1) return false;
  }
  return true;
}

std::int64_t DistanceProfile::min_transmission() const { return *std::min_element(tr.begin(), tr.end()); }
std::int64_t DistanceProfile::max_transmission() const { return *std::max_element(tr.begin(), tr.end()); }
int DistanceProfile::min_degree() const { return *std::min_element(deg.begin(), deg.end()); }
int DistanceProfile::max_degree() const { return *std::max_element(deg.begin(), deg.end()); }

DistanceProfile distance_profile(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error("empty graph has no distance profile");
  DistanceProfile p;
  p.n = n;
  p.dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  p.tr.assign(static_cast<std::size_t>(n), 0);
  p.deg.resize(static_cast<std::size_t>(n));
  const std::uint64_t all = full_mask(n);

  // Level-synchronous BFS on bitsets.
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int level = 0;
    std::int64_t total = 0;
    while (frontier != 0 && seen != all) {
      ++level;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
      next &= ~seen;
      for (std::uint64_t f = next; f != 0; f &= f - 1) {
        p.dist[static_cast<std::size_t>(s * n + std::countr_zero(f))] = level;
      }
      total += static_cast<std::int64_t>(level) * std::popcount(next);
      seen |= next;
      frontier = next;
    }
    if (seen != all) throw NotConnectedError();
    p.tr[static_cast<std::size_t>(s)] = total;
    p.deg[static_cast<std::size_t>(s)] = g.degree(s);
  }
  return p;
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t count = 0;
  for (int u = 0; u < g.order(); ++u) {
    // neighbours v > u, then common neighbours w > v
    std::uint64_t higher = g.row(u) & ~full_mask(u + 1);
    for (std::uint64_t r = higher; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      count += std::popcount(higher & g.row(v) & ~full_mask(v + 1));
    }
  }
  return count;
}

WienerIndices wiener_indices(const DistanceProfile& profile) {
  WienerIndices w;
  for (int u = 0; u < profile.n; ++u) {
    const auto t = profile.tr[static_cast<std::size_t>(u)];
    w.wiener += t;
    w.degree_weighted += t * profile.deg[static_cast<std::size_t>(u)];
  }
  return w;
}

WienerIndices wiener_indices(const Graph& g) { return wiener_indices(distance_profile(g)); }

Conductance conductance(const Graph& g) {
  const int n = g.order();
  if (n > kMaxConductanceOrder) throw Error("conductance requires n <= 20");
  if (n < 2) throw Error("conductance requires at least two vertices");
  if (!g.connected()) throw NotConnectedError();

  const std::uint64_t all = full_mask(n);
  std::int64_t best_boundary = 0;
  std::int64_t best_size = 0;
  std::uint64_t best_set = 0;
  for (std::uint64_t s = 1; s <= all; ++s) {
    const int size = std::popcount(s);
    if (2 * size > n) continue;
    std::int64_t boundary = 0;
    for (std::uint64_t r = s; r != 0; r &= r - 1) {
      boundary += std::popcount(g.row(std::countr_zero(r)) & ~s);
    }
    if (best_size == 0 || boundary * best_size < best_boundary * size) {
      best_boundary = boundary;
      best_size = size;
      best_set = s;
    }
  }
  Conductance c;
  c.value = mpq_class(static_cast<long>(best_boundary), static_cast<unsigned long>(best_size));
  c.value.canonicalize();
  c.subset = best_set;
  return c;
}

namespace graphs {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int leaves) {
  if (leaves < 1) throw Error("star needs at least one leaf");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph cricket() {
  const std::pair<int, int> edges[] = {{3, 0}, {3, 4}, {0, 4}, {4, 2}, {4, 1}};
  return Graph::from_edges(5, edges);
}

}  // namespace graphs

}  // namespace distinv
