#include "toral/corner_path.hpp"

#include <algorithm>

#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"

namespace toral {

namespace {

struct PathSearch {
    const TorusGraph& tg;
    const std::function<bool(const CornerPath&)>& visit;
    VertexId corner;
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;
    std::set<VertexId> seen;
    bool stop = false;

    PathSearch(const TorusGraph& g, const std::function<bool(const CornerPath&)>& v,
               VertexId c)
        : tg(g), visit(v), corner(c) {}

    void dfs(VertexId at) {
        if (stop) return;
        std::vector<EdgeId> out;
        for (const Edge& e : tg.graph.edges())
            if (e.u == at) out.push_back(e.id);  // directed along the curve
        for (EdgeId id : out) {
            if (stop) return;
            const Edge& e = tg.graph.edge(id);
            if (edge_touches_boundary_interior(tg, id)) continue;
            if (e.v == corner) {
                if (edges.empty()) continue;  // a corner loop is not a path
                edges.push_back(id);
                vertices.push_back(corner);
                if (visit(CornerPath{edges, vertices})) stop = true;
                vertices.pop_back();
                edges.pop_back();
                continue;
            }
            if (seen.count(e.v)) continue;
            edges.push_back(id);
            vertices.push_back(e.v);
            seen.insert(e.v);
            dfs(e.v);
            seen.erase(e.v);
            vertices.pop_back();
            edges.pop_back();
        }
    }
};

}  // namespace

void for_each_corner_path(const TorusGraph& tg,
                          const std::function<bool(const CornerPath&)>& visit) {
    if (!tg.corner_vertex)
        throw InvalidInput("corner path search requires a corner-anchored arrangement");
    VertexId corner = *tg.corner_vertex;
    PathSearch search(tg, visit, corner);
    search.vertices.push_back(corner);
    search.seen.insert(corner);
    search.dfs(corner);
}

std::optional<CornerPath> find_corner_path(const TorusGraph& tg) {
    std::optional<CornerPath> found;
    for_each_corner_path(tg, [&](const CornerPath& path) {
        found = path;
        return true;
    });
    return found;
}

bool check_corner_path(const TorusGraph& tg, const CornerPath& path) {
    if (!tg.corner_vertex || path.edges.empty()) return false;
    if (path.vertices.size() != path.edges.size() + 1) return false;
    VertexId corner = *tg.corner_vertex;
    if (path.vertices.front() != corner || path.vertices.back() != corner) return false;
    std::set<VertexId> interior(path.vertices.begin() + 1, path.vertices.end() - 1);
    if (interior.size() != path.vertices.size() - 2) return false;  // simple
    if (interior.count(corner)) return false;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const Edge& e = tg.graph.edge(path.edges[i]);
        // orientation respected: traversed from u to v
        if (e.u != path.vertices[i] || e.v != path.vertices[i + 1]) return false;
        if (edge_touches_boundary_interior(tg, path.edges[i])) return false;
    }
    // the lift runs from corner lift (0,1) to corner lift (1,0)
    const auto& first = tg.geometry.at(path.edges.front());
    const auto& last = tg.geometry.at(path.edges.back());
    if (!(first.front() == PlanePoint{Rat(0), Rat(1)})) return false;
    if (!(last.back() == PlanePoint{Rat(1), Rat(0)})) return false;
    return true;
}

SReduction reduce_arrangement_to_S(const TorusGraph& tg, const CornerPath& path) {
    if (tg.curves.size() != 2)
        throw InvalidInput("reduction expects an arrangement of exactly two curves");
    int anchored = -1, other = -1;
    for (std::size_t i = 0; i < tg.curves.size(); ++i)
        (tg.curves[i].corner_anchored ? anchored : other) = static_cast<int>(i);
    if (anchored < 0) throw InvalidInput("reduction expects a corner-anchored curve");
    const HomologyClass& knot = tg.curves[other].cls;
    if (knot.a < 1 || knot.b < 1)
        throw InvalidInput("the non-anchored curve must have positive class");
    if (!check_corner_path(tg, path)) throw InvalidInput("invalid corner path");

    SReduction red;
    red.spec = CirculantSpec(static_cast<int>(knot.a), static_cast<int>(knot.b)).normalized();

    std::set<EdgeId> on_path(path.edges.begin(), path.edges.end());
    // delete the anchored-curve edges that are not part of the path
    for (const Edge& e : tg.graph.edges()) {
        auto it = tg.edge_curve.find(e.id);
        if (it == tg.edge_curve.end() || it->second != anchored) continue;
        if (!on_path.count(e.id)) red.ops.push_back(DeleteOp{e.id});
    }
    // contract the knot-curve edges on the path
    for (EdgeId id : path.edges) {
        auto it = tg.edge_curve.find(id);
        if (it != tg.edge_curve.end() && it->second == other) red.ops.push_back(ContractOp{id});
    }

    MultiGraph g = apply_ops(tg.graph, red.ops);
    // smooth every degree-2 vertex: contract its lowest-id non-loop edge
    for (bool again = true; again;) {
        again = false;
        for (VertexId v : g.vertices()) {
            if (g.degree(v) != 2) continue;
            std::vector<EdgeId> inc = g.incident_edges(v);
            EdgeId pick = -1;
            for (EdgeId id : inc)
                if (!g.edge(id).is_loop() && (pick == -1 || id < pick)) pick = id;
            if (pick == -1)
                throw SearchFailure("reduction left an isolated circle component");
            red.ops.push_back(ContractOp{pick});
            g = contract_edge(g, pick);
            again = true;
            break;
        }
    }
    red.reduced = g;

    auto iso = is_isomorphic(g, build_S(red.spec), std::max<int>(red.spec.order(), 8));
    if (!iso)
        throw SearchFailure("reduced arrangement is not isomorphic to S(" +
                            std::to_string(red.spec.p) + "," + std::to_string(red.spec.q) + ")");
    red.iso = *iso;
    return red;
}

}  // namespace toral
