#include "distinv/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "distinv/canonical.hpp"
#include "distinv/graph6.hpp"

namespace distinv {

namespace {

// Free-tree enumeration after Wright, Richmond, Odlyzko and McKay: each
// tree is a canonical level sequence of a rooted tree rooted at its centre.
using Layout = std::vector<int>;

bool next_rooted_tree(Layout& layout, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

bool next_rooted_tree(Layout& layout) {
  std::size_t p = layout.size() - 1;
  while (layout[p] == 1) --p;
  return next_rooted_tree(layout, p);
}

// Splits at the second vertex of level 1: the subtree hanging there (levels
// shifted down by one) and the remainder of the tree.
void split_tree(const Layout& layout, Layout& left, Layout& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Advances layout to the next valid free-tree candidate; returns false when
// the sequence is exhausted.
bool next_tree(Layout& layout) {
  for (;;) {
    Layout left;
    Layout rest;
    split_tree(layout, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return true;

    const std::size_t p = left.size();
    const int old = layout[p];
    if (!next_rooted_tree(layout, p)) return false;
    if (old > 2) {
      split_tree(layout, left, rest);
      const int new_left_height = *std::max_element(left.begin(), left.end());
      const auto len = static_cast<std::size_t>(new_left_height + 1);
      for (std::size_t i = 0; i < len; ++i) layout[layout.size() - len + i] = static_cast<int>(i) + 1;
    }
  }
}

Graph layout_to_graph(const Layout& layout) {
  const int n = static_cast<int>(layout.size());
  Graph g(n);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    const int level = layout[static_cast<std::size_t>(i)];
    if (!stack.empty()) {
      while (layout[static_cast<std::size_t>(stack.back())] >= level) stack.pop_back();
      g.add_edge(i, stack.back());
    }
    stack.push_back(i);
  }
  return g;
}

}  // namespace

void for_each_tree(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw Error("tree order must lie in [1, " + std::to_string(kMaxTreeOrder) + "], got " + std::to_string(n));
  }
  if (n <= 3) {
    visit(graphs::path(n));
    return;
  }
  Layout layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  while (next_tree(layout)) {
    visit(layout_to_graph(layout));
    if (!next_rooted_tree(layout)) break;
  }
}

std::vector<Graph> generate_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

std::vector<std::vector<Graph>> generate_connected_graphs_up_to(int n) {
  if (n < 1 || n > kMaxBuiltinConnectedOrder) {
    throw Error("built-in connected-graph generation supports n <= " + std::to_string(kMaxBuiltinConnectedOrder) +
                "; supply larger corpora as graph6 input (e.g. from nauty geng -c)");
  }
  // Every connected graph has a vertex whose removal leaves it connected,
  // so extending level k-1 by one vertex with a nonempty neighbourhood
  // reaches every class on level k.
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph(1)});
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (const Graph& base : levels.back()) {
      const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
      for (std::uint64_t s = 1; s < subsets; ++s) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int v = 0; v < k - 1; ++v) {
          if ((s >> v) & 1U) g.add_edge(v, k - 1);
        }
        Graph canon = canonical_form(g);
        std::string cert = write_graph6(canon);
        if (seen.insert(cert).second) found.emplace_back(std::move(cert), std::move(canon));
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> level;
    level.reserve(found.size());
    for (auto& [cert, g] : found) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Graph> generate_connected_graphs(int n) {
  auto levels = generate_connected_graphs_up_to(n);
  return std::move(levels.back());
}

}  // namespace distinv
