#pragma once

#include <map>
#include <optional>

#include "toral/multigraph.hpp"

namespace toral {

// Multiplicity-preserving graph isomorphism (parallel edges and loops
// both count). Backtracking with degree-signature pruning; no canonical
// form. `vertex_cap` guards the search; certificate verification raises
// it as needed.
std::optional<std::map<VertexId, VertexId>> is_isomorphic(const MultiGraph& g,
                                                          const MultiGraph& h,
                                                          int vertex_cap = 16);

// Checks that `map` is a bijection V(g) -> V(h) preserving edge
// multiplicities. Linear; no search.
bool check_isomorphism(const MultiGraph& g, const MultiGraph& h,
                       const std::map<VertexId, VertexId>& map);

}  // namespace toral
