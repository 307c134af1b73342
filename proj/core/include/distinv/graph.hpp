#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace distinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a disconnected graph reaches a distance computation.
class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("graph not connected") {}
};

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on vertices 0..n-1 stored as one 64-bit row per
/// vertex. Bit v of row u is set iff u ~ v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  std::uint64_t row(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  std::span<const std::uint64_t> rows() const { return adj_; }
  bool adjacent(int u, int v) const { return (row(u) >> v) & 1U; }

  void add_edge(int u, int v);

  int degree(int u) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Vertex v of *this becomes vertex perm[v] of the result.
  Graph permuted(std::span<const int> perm) const;

  bool connected() const;
  bool complete() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// All-pairs unweighted distances plus the transmission and degree vectors.
struct DistanceProfile {
  int n = 0;
  std::vector<int> dist;            // row-major n*n
  std::vector<std::int64_t> tr;     // tr[u] = sum_v dist(u, v)
  std::vector<int> deg;

  int at(int u, int v) const { return dist[static_cast<std::size_t>(u * n + v)]; }

  std::int64_t min_transmission() const;
  std::int64_t max_transmission() const;
  int min_degree() const;
  int max_degree() const;
};

/// BFS from every vertex. Throws NotConnectedError when some pair is
/// unreachable.
DistanceProfile distance_profile(const Graph& g);

/// Number of vertex triples inducing K_3.
std::int64_t triangle_count(const Graph& g);

struct WienerIndices {
  std::int64_t wiener = 0;           // sum_u tr(u)
  std::int64_t degree_weighted = 0;  // sum_u deg(u) * tr(u)
};

WienerIndices wiener_indices(const Graph& g);
WienerIndices wiener_indices(const DistanceProfile& profile);

inline constexpr int kMaxConductanceOrder = 20;

struct Conductance {
  mpq_class value;
  std::uint64_t subset = 0;  // one minimizing vertex set, as a bitmask
};

/// Exhaustive minimum of |boundary(S)| / |S| over nonempty S with
/// |S| <= n/2. Requires 2 <= n <= 20 and a connected graph.
Conductance conductance(const Graph& g);

namespace graphs {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// K_{m,1}; the centre is vertex 0 and the leaves are 1..m.
Graph star(int leaves);
Graph petersen();
/// Triangle {0, 3, 4} with pendant vertices 1 and 2 attached to vertex 4.
/// Vertex i here is vertex i+1 of the usual drawing.
Graph cricket();

}  // namespace graphs

}  // namespace distinv
