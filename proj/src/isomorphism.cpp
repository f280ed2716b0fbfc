#include "toral/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "toral/errors.hpp"

namespace toral {

namespace {

struct Indexed {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> mult;  // multiplicity matrix, loops on diagonal
    std::vector<int> degree;             // loops count twice
    std::vector<int> loops;

    explicit Indexed(const MultiGraph& g) {
        ids.assign(g.vertices().begin(), g.vertices().end());
        for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        int n = static_cast<int>(ids.size());
        mult.assign(n, std::vector<int>(n, 0));
        degree.assign(n, 0);
        loops.assign(n, 0);
        for (const Edge& e : g.edges()) {
            int a = index[e.u], b = index[e.v];
            mult[a][b] += 1;
            if (a != b) mult[b][a] += 1;
            degree[a] += 1;
            degree[b] += 1;
            if (a == b) loops[a] += 1;
        }
    }
};

struct Search {
    const Indexed& g;
    const Indexed& h;
    std::vector<int> g_to_h;  // -1 = unassigned
    std::vector<bool> h_used;
    std::vector<int> order;  // g vertices, connectivity-first

    Search(const Indexed& gg, const Indexed& hh) : g(gg), h(hh) {
        int n = static_cast<int>(g.ids.size());
        g_to_h.assign(n, -1);
        h_used.assign(n, false);
        // Order vertices so each one (after the first of a component) is
        // adjacent to an earlier one; anchors the adjacency pruning.
        std::vector<bool> placed(n, false);
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                bool attached = false;
                for (int u : order)
                    if (g.mult[v][u] > 0) attached = true;
                if (attached || order.empty()) {
                    if (best == -1 || g.degree[v] > g.degree[best]) best = v;
                }
            }
            if (best == -1) {  // next component
                for (int v = 0; v < n && best == -1; ++v)
                    if (!placed[v]) best = v;
            }
            placed[best] = true;
            order.push_back(best);
        }
    }

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        int gv = order[pos];
        for (int hv = 0; hv < static_cast<int>(h.ids.size()); ++hv) {
            if (h_used[hv]) continue;
            if (g.degree[gv] != h.degree[hv] || g.loops[gv] != h.loops[hv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < pos && ok; ++j) {
                int gu = order[j];
                if (g.mult[gv][gu] != h.mult[hv][g_to_h[gu]]) ok = false;
            }
            if (!ok) continue;
            g_to_h[gv] = hv;
            h_used[hv] = true;
            if (extend(pos + 1)) return true;
            g_to_h[gv] = -1;
            h_used[hv] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> is_isomorphic(const MultiGraph& g,
                                                          const MultiGraph& h,
                                                          int vertex_cap) {
    if (static_cast<int>(g.vertex_count()) > vertex_cap ||
        static_cast<int>(h.vertex_count()) > vertex_cap)
        throw CapExceeded("isomorphism size cap exceeded (cap " + std::to_string(vertex_cap) +
                          " vertices)");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;

    Indexed gi(g), hi(h);
    {
        auto sig = [](const Indexed& x) {
            std::vector<std::pair<int, int>> s;
            for (std::size_t v = 0; v < x.ids.size(); ++v) s.emplace_back(x.degree[v], x.loops[v]);
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sig(gi) != sig(hi)) return std::nullopt;
    }

    Search search(gi, hi);
    if (!search.extend(0)) return std::nullopt;
    std::map<VertexId, VertexId> out;
    for (std::size_t i = 0; i < gi.ids.size(); ++i)
        out[gi.ids[i]] = hi.ids[search.g_to_h[i]];
    return out;
}

bool check_isomorphism(const MultiGraph& g, const MultiGraph& h,
                       const std::map<VertexId, VertexId>& map) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (map.size() != g.vertex_count()) return false;
    std::set<VertexId> image;
    for (const auto& [gv, hv] : map) {
        if (!g.has_vertex(gv) || !h.has_vertex(hv)) return false;
        image.insert(hv);
    }
    if (image.size() != h.vertex_count()) return false;

    std::map<std::pair<VertexId, VertexId>, int> gm, hm;
    for (const Edge& e : g.edges()) {
        auto [a, b] = std::minmax(map.at(e.u), map.at(e.v));
        gm[{a, b}] += 1;
    }
    for (const Edge& e : h.edges()) {
        auto [a, b] = std::minmax(e.u, e.v);
        hm[{a, b}] += 1;
    }
    return gm == hm;
}

}  // namespace toral
