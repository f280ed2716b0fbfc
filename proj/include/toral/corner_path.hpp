#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "toral/arrangement.hpp"
#include "toral/circulant.hpp"

namespace toral {

// A path in a corner-anchored arrangement from the corner lift (0,1) to
// the corner lift (1,0), traversing every edge along its curve orientation
// and touching the square boundary only at its two ends.
struct CornerPath {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // corner, interior..., corner
};

// First such path in deterministic DFS order. The arrangement must be
// corner-anchored; existence is guaranteed for arrangements satisfying the
// minor-lemma hypotheses, so a miss signals a construction bug.
std::optional<CornerPath> find_corner_path(const TorusGraph& tg);

// Enumerates corner paths until the visitor returns true.
void for_each_corner_path(const TorusGraph& tg,
                          const std::function<bool(const CornerPath&)>& visit);

// Checks the path invariants (orientation respected, boundary only at the
// corners, simple).
bool check_corner_path(const TorusGraph& tg, const CornerPath& path);

// Deleting the anchored-curve edges not on the path, contracting the other
// curve's edges on the path, and smoothing the leftover degree-2 vertices
// turns the arrangement into S(p,q). The op list replays on the
// arrangement's abstract graph.
struct SReduction {
    CirculantSpec spec;                 // normalized (p,q) of the result
    std::vector<ReplayOp> ops;
    MultiGraph reduced;
    std::map<VertexId, VertexId> iso;   // reduced -> build_S(spec)
};

SReduction reduce_arrangement_to_S(const TorusGraph& tg, const CornerPath& path);

}  // namespace toral
