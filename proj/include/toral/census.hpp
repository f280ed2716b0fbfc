#pragma once

#include <set>
#include <vector>

#include "toral/arrangement.hpp"

namespace toral {

struct CensusLimits {
    std::size_t max_graph_edges = 20;  // enumeration is exponential; configurable
    std::size_t max_cycles = 20000;
};

struct SimpleCycle {
    std::vector<WalkStep> steps;       // oriented traversal
    std::vector<VertexId> vertices;
    HomologyClass cls;                 // normalized unoriented class
};

// A maximal family of pairwise vertex-disjoint simple cycles sharing one
// primitive class: a torus link T(k*a, k*b) inside the graph.
struct LinkFamily {
    HomologyClass cls;
    int multiplicity = 0;
    std::vector<std::size_t> witness;  // indices of disjoint cycles in Census::cycles
};

// The set K(G) machinery: which knot and link types the embedding carries.
struct Census {
    std::vector<SimpleCycle> cycles;
    std::set<HomologyClass> classes;    // normalized classes of all simple cycles
    std::vector<LinkFamily> families;   // classes realized with multiplicity >= 2
};

Census knot_link_census(const TorusGraph& tg, const CensusLimits& limits = CensusLimits());

}  // namespace toral
