#pragma once

#include <functional>
#include <vector>

#include "distinv/graph.hpp"

namespace distinv {

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxBuiltinConnectedOrder = 8;

/// Calls visit once per isomorphism class of free trees on n vertices,
/// 1 <= n <= 16. Trees come out in level-sequence order.
void for_each_tree(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> generate_trees(int n);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 8, sorted by canonical certificate. Larger corpora
/// have to be supplied as graph6 files.
std::vector<Graph> generate_connected_graphs(int n);

/// generate_connected_graphs(k) for every k = 1..n, sharing the work of the
/// lower levels. Element k-1 holds the graphs on k vertices.
std::vector<std::vector<Graph>> generate_connected_graphs_up_to(int n);

}  // namespace distinv
