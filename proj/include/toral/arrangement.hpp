#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toral/multigraph.hpp"
#include "toral/torus_geometry.hpp"

namespace toral {

// One realized geodesic of an arrangement (spec index + parallel copy).
struct CurveRef {
    int spec_index = -1;
    int copy_index = 0;
    HomologyClass cls;
    Rat offset;  // actual offset used (after any adjustment)
    bool corner_anchored = false;
};

// A graph embedded on the flat torus. Edge endpoints are oriented along
// their source curve where a curve tag is present (edge.u = start). Edge
// geometry is a chain of in-square points; consecutive points with equal
// torus representatives mark a boundary wrap, all other consecutive pairs
// are straight segments. Windings satisfy
//     lift(v) = pos(u) + segment displacement = pos(v) + winding.
struct TorusGraph {
    MultiGraph graph;
    std::map<VertexId, PlanePoint> position;              // in [0,1) x [0,1)
    std::map<EdgeId, HomologyClass> winding;
    std::map<EdgeId, std::vector<PlanePoint>> geometry;
    std::map<EdgeId, int> edge_curve;                     // curve index or -1
    std::vector<CurveRef> curves;
    std::optional<VertexId> corner_vertex;
};

// Vertices at the pairwise intersection points of the curves, edges the
// curve segments between consecutive intersections. Curves without any
// intersection get a marker vertex carrying the whole curve as a loop.
// Throws DegenerateArrangement on triple points or intersections touching
// the square boundary; callers wanting automatic re-offsetting use
// arrangement_adjusted.
TorusGraph arrangement(const std::vector<CurveSpec>& specs);

// Retries arrangement() after shifting all non-anchored offsets by
// 1/(2 * lcm of the offset denominators), repeatedly, until the general
// position conditions hold. Deterministic.
TorusGraph arrangement_adjusted(std::vector<CurveSpec> specs);

// The specs actually used by the adjusted arrangement (for certificates).
std::vector<CurveSpec> arrangement_specs(const TorusGraph& tg);

// Straight segments of an edge's geometry (wrap pairs skipped).
std::vector<std::pair<PlanePoint, PlanePoint>> edge_segments(const TorusGraph& tg, EdgeId e);

// True when the edge's geometry touches the square boundary anywhere other
// than its first or last point.
bool edge_touches_boundary_interior(const TorusGraph& tg, EdgeId e);

struct WalkStep {
    EdgeId edge;
    bool forward;  // traversed u -> v?
};

// Signed sum of edge windings along a closed walk.
HomologyClass cycle_class(const TorusGraph& tg, const std::vector<WalkStep>& walk);

// Convenience overload inferring traversal directions by chaining
// endpoints; throws if the edges do not form a closed walk.
HomologyClass cycle_class(const TorusGraph& tg, const std::vector<EdgeId>& walk);

// Full embedding validation: position/geometry/winding consistency and
// exact pairwise disjointness of the drawn curves away from shared
// endpoints. Throws InvalidInput with a description on failure.
void validate_embedding(const TorusGraph& tg);

// Mirror image (x,y) -> (x,-y): positions, geometry and windings.
TorusGraph mirror_embedding(const TorusGraph& tg);

// Used by the Hopf-ladder builder: append the edges of one geodesic split
// at the given events ((parameter, vertex), at least one event required).
void add_geodesic_edges(TorusGraph& tg, const Geodesic& geo,
                        std::vector<std::pair<Rat, VertexId>> events, int curve_index);

}  // namespace toral
