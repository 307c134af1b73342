#include "distinv/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "distinv/graph6.hpp"

namespace distinv {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t mask_of(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Splits cells by neighbour counts into each splitter cell until stable.
// Subcells are ordered by count, so the result depends only on structure.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = mask_of(cells[s]);
      Cells next;
      next.reserve(cells.size() + 4);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) {
          next.push_back(std::move(cell));
          continue;
        }
        changed = true;
        std::size_t i = 0;
        while (i < keyed.size()) {
          std::vector<int> part;
          const int key = keyed[i].first;
          for (; i < keyed.size() && keyed[i].first == key; ++i) part.push_back(keyed[i].second);
          next.push_back(std::move(part));
        }
      }
      cells = std::move(next);
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root[0].begin(), root[0].end(), 0);
    std::vector<int> path;
    visit(std::move(root), path);
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
    return lab;
  }

 private:
  std::vector<std::uint64_t> code_for(const std::vector<int>& order) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> code(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = g_.row(order[static_cast<std::size_t>(i)]);
      std::uint64_t mapped = 0;
      for (; r != 0; r &= r - 1) mapped |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
      code[static_cast<std::size_t>(i)] = mapped;
    }
    return code;
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) order.push_back(c[0]);
    auto code = code_for(order);
    if (best_order_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      // best_order_[i] -> order[i] is an automorphism.
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        gamma[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
      }
      if (automorphisms_.size() < kMaxStoredAutomorphisms) automorphisms_.push_back(std::move(gamma));
    }
  }

  // True if v lies in the orbit of some already explored vertex under the
  // stored automorphisms that fix every vertex on the current path.
  bool pruned(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes_path = std::all_of(path.begin(), path.end(),
                                    [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes_path) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x);
        int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int w) { return find(w) == root; });
  }

  void visit(Cells cells, std::vector<int>& path) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> candidates = cells[index];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      if (pruned(v, explored, path)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != index) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      path.push_back(v);
      visit(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_code_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return Search(g).run();
}

Graph canonical_form(const Graph& g) { return g.permuted(canonical_labeling(g)); }

std::string certificate(const Graph& g) { return write_graph6(canonical_form(g)); }

}  // namespace distinv
