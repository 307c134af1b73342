#pragma once

#include <string>
#include <vector>

#include "distinv/graph.hpp"

namespace distinv {

/// Canonical labeling by individualization and equitable refinement.
/// Returns lab with lab[v] = new label of vertex v; isomorphic inputs map to
/// identical relabeled graphs.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// Compact isomorphism certificate: the graph6 encoding of canonical_form.
std::string certificate(const Graph& g);

}  // namespace distinv
