#include "toral/census.hpp"

#include <algorithm>
#include <map>

#include "toral/errors.hpp"

namespace toral {

namespace {

struct CycleEnumerator {
    const TorusGraph& tg;
    const CensusLimits& limits;
    std::vector<SimpleCycle>& out;
    std::vector<WalkStep> path;
    std::vector<VertexId> path_vertices;
    std::set<VertexId> on_path;
    std::set<EdgeId> used_edges;
    VertexId root = -1;

    CycleEnumerator(const TorusGraph& g, const CensusLimits& l, std::vector<SimpleCycle>& o)
        : tg(g), limits(l), out(o) {}

    void record() {
        if (out.size() >= limits.max_cycles)
            throw CapExceeded("simple-cycle census exceeded the cycle cap");
        SimpleCycle cycle;
        cycle.steps = path;
        cycle.vertices = path_vertices;
        cycle.cls = normalize_unoriented(cycle_class(tg, path));
        out.push_back(std::move(cycle));
    }

    void extend(VertexId at) {
        for (const Edge& e : tg.graph.edges()) {
            if (e.u != at && e.v != at) continue;
            if (used_edges.count(e.id)) continue;
            if (e.is_loop()) continue;  // loops handled separately
            VertexId to = e.other(at);
            if (to < root) continue;
            bool forward = e.u == at;
            if (to == root) {
                // close: dedupe direction by requiring first edge id < last
                if (path.size() >= 1 && path[0].edge < e.id) {
                    path.push_back({e.id, forward});
                    record();
                    path.pop_back();
                }
                continue;
            }
            if (on_path.count(to)) continue;
            path.push_back({e.id, forward});
            path_vertices.push_back(to);
            on_path.insert(to);
            used_edges.insert(e.id);
            extend(to);
            used_edges.erase(e.id);
            on_path.erase(to);
            path_vertices.pop_back();
            path.pop_back();
        }
    }

    void run() {
        // loops are one-edge simple cycles
        for (const Edge& e : tg.graph.edges()) {
            if (!e.is_loop()) continue;
            path = {{e.id, true}};
            path_vertices = {e.u};
            record();
        }
        path.clear();
        for (VertexId r : tg.graph.vertices()) {
            root = r;
            path.clear();
            path_vertices = {r};
            on_path = {r};
            used_edges.clear();
            extend(r);
        }
    }
};

// maximum number of pairwise vertex-disjoint cycles among `candidates`
int max_disjoint(const std::vector<std::size_t>& candidates,
                 const std::vector<std::set<VertexId>>& vertex_sets,
                 std::vector<std::size_t>& best_witness) {
    std::size_t n = candidates.size();
    std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = vertex_sets[candidates[i]];
            const auto& b = vertex_sets[candidates[j]];
            bool overlap = false;
            for (VertexId v : a)
                if (b.count(v)) {
                    overlap = true;
                    break;
                }
            conflict[i][j] = conflict[j][i] = overlap;
        }
    std::vector<std::size_t> current, best;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (current.size() > best.size()) best = current;
        if (current.size() + (n - from) <= best.size()) return;  // bound
        for (std::size_t i = from; i < n; ++i) {
            bool ok = true;
            for (std::size_t c : current)
                if (conflict[c][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    best_witness.clear();
    for (std::size_t i : best) best_witness.push_back(candidates[i]);
    return static_cast<int>(best.size());
}

}  // namespace

Census knot_link_census(const TorusGraph& tg, const CensusLimits& limits) {
    if (tg.graph.edge_count() > limits.max_graph_edges)
        throw CapExceeded("census edge cap exceeded (cap " +
                          std::to_string(limits.max_graph_edges) + " edges)");
    Census census;
    CycleEnumerator enumerator(tg, limits, census.cycles);
    enumerator.run();

    std::vector<std::set<VertexId>> vertex_sets;
    vertex_sets.reserve(census.cycles.size());
    for (const SimpleCycle& c : census.cycles) {
        census.classes.insert(c.cls);
        vertex_sets.emplace_back(c.vertices.begin(), c.vertices.end());
    }

    std::map<HomologyClass, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < census.cycles.size(); ++i) {
        const HomologyClass& cls = census.cycles[i].cls;
        if (is_null(cls)) continue;  // only essential cycles form links
        by_class[cls].push_back(i);
    }
    for (const auto& [cls, candidates] : by_class) {
        if (candidates.size() < 2) continue;
        std::vector<std::size_t> witness;
        int k = max_disjoint(candidates, vertex_sets, witness);
        if (k >= 2) census.families.push_back({cls, k, witness});
    }
    return census;
}

}  // namespace toral
