#include "toral/minor_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>
#include <unordered_set>

#include "toral/errors.hpp"

namespace toral {

int default_oracle_cap() {
    if (const char* env = std::getenv("TORAL_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 18;
}

OracleLimits::OracleLimits() : host_cap(default_oracle_cap()), state_budget(50'000'000) {}

namespace {

struct PatternInfo {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    // non-loop pattern edges as (i, j, multiplicity), i < j
    std::vector<std::array<int, 3>> pair_demand;
    std::vector<int> loop_demand;  // per pattern vertex
};

struct HostInfo {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> mult;       // non-loop multiplicities
    std::vector<std::vector<int>> adj;        // neighbor lists (non-loop)
    std::vector<int> loop_count;
};

struct MinorSearch {
    const PatternInfo& pat;
    const HostInfo& host;
    long long budget;
    long long used = 0;
    int n, h;
    std::vector<int> cls;  // host vertex -> pattern vertex or -1
    std::unordered_set<std::string> visited;

    MinorSearch(const PatternInfo& p, const HostInfo& g, long long b)
        : pat(p), host(g), budget(b), n(static_cast<int>(g.ids.size())),
          h(static_cast<int>(p.ids.size())), cls(n, -1) {}

    int pair_edges(int i, int j) const {
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (cls[v] != i) continue;
            for (int w : host.adj[v])
                if (cls[w] == j) count += host.mult[v][w];
        }
        return count;
    }

    // non-tree intra edges + host loops available inside branch set i
    int loop_capacity(int i) const {
        int verts = 0, intra = 0, loops = 0;
        for (int v = 0; v < n; ++v) {
            if (cls[v] != i) continue;
            ++verts;
            loops += host.loop_count[v];
            for (int w : host.adj[v])
                if (cls[w] == i && w > v) intra += host.mult[v][w];
        }
        if (verts == 0) return 0;
        return std::max(0, intra - (verts - 1)) + loops;
    }

    bool reachable(int i, int j) const {
        // B_i -> B_j through unassigned vertices
        std::vector<char> seen(n, 0);
        std::queue<int> work;
        for (int v = 0; v < n; ++v)
            if (cls[v] == i) {
                seen[v] = 1;
                work.push(v);
            }
        if (work.empty()) return true;  // unseeded; seeding happens first
        while (!work.empty()) {
            int v = work.front();
            work.pop();
            for (int w : host.adj[v]) {
                if (seen[w]) continue;
                if (cls[w] == j) return true;
                if (cls[w] == -1) {
                    seen[w] = 1;
                    work.push(w);
                }
            }
        }
        return false;
    }

    bool search() {
        if (++used > budget) throw CapExceeded("minor search state budget exceeded");
        {
            std::string key(cls.begin(), cls.end());
            for (char& c : key) c = static_cast<char>(c + 2);
            if (!visited.insert(key).second) return false;
        }

        // seed empty branch sets first
        int empty_count = 0, first_empty = -1;
        std::vector<char> nonempty(h, 0);
        for (int v = 0; v < n; ++v)
            if (cls[v] >= 0) nonempty[cls[v]] = 1;
        int unassigned = 0;
        for (int v = 0; v < n; ++v)
            if (cls[v] == -1) ++unassigned;
        for (int i = 0; i < h; ++i)
            if (!nonempty[i]) {
                ++empty_count;
                if (first_empty == -1) first_empty = i;
            }
        if (empty_count > unassigned) return false;
        if (first_empty != -1) {
            for (int v = 0; v < n; ++v) {
                if (cls[v] != -1) continue;
                cls[v] = first_empty;
                if (search()) return true;
                cls[v] = -1;
            }
            return false;
        }

        // collect unsatisfied constraints
        struct Move {
            int vertex, set;
        };
        std::vector<Move> best_moves;
        bool all_satisfied = true;
        bool have_best = false;
        for (const auto& [i, j, demand] : pat.pair_demand) {
            if (pair_edges(i, j) >= demand) continue;
            all_satisfied = false;
            if (!reachable(i, j)) return false;
            std::vector<Move> moves;
            for (int v = 0; v < n; ++v) {
                if (cls[v] == -1) continue;
                int side = cls[v] == i ? i : (cls[v] == j ? j : -1);
                if (side == -1) continue;
                for (int w : host.adj[v])
                    if (cls[w] == -1) moves.push_back({w, side});
            }
            std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
                return a.vertex < b.vertex || (a.vertex == b.vertex && a.set < b.set);
            });
            moves.erase(std::unique(moves.begin(), moves.end(),
                                    [](const Move& a, const Move& b) {
                                        return a.vertex == b.vertex && a.set == b.set;
                                    }),
                        moves.end());
            if (moves.empty()) return false;
            if (!have_best || moves.size() < best_moves.size()) {
                best_moves = std::move(moves);
                have_best = true;
            }
        }
        for (int i = 0; i < h; ++i) {
            if (pat.loop_demand[i] == 0 || loop_capacity(i) >= pat.loop_demand[i]) continue;
            all_satisfied = false;
            std::vector<Move> moves;
            for (int v = 0; v < n; ++v) {
                if (cls[v] != i) continue;
                for (int w : host.adj[v])
                    if (cls[w] == -1) moves.push_back({w, i});
            }
            std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
                return a.vertex < b.vertex;
            });
            moves.erase(std::unique(moves.begin(), moves.end(),
                                    [](const Move& a, const Move& b) {
                                        return a.vertex == b.vertex && a.set == b.set;
                                    }),
                        moves.end());
            if (moves.empty()) return false;
            if (!have_best || moves.size() < best_moves.size()) {
                best_moves = std::move(moves);
                have_best = true;
            }
        }

        if (all_satisfied) return true;
        for (const Move& m : best_moves) {
            cls[m.vertex] = m.set;
            if (search()) return true;
            cls[m.vertex] = -1;
        }
        return false;
    }
};

std::vector<EdgeId> host_edges_between_sets(const MultiGraph& host,
                                            const std::vector<VertexId>& a,
                                            const std::vector<VertexId>& b) {
    std::set<VertexId> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<EdgeId> out;
    for (const Edge& e : host.edges()) {
        if ((sa.count(e.u) && sb.count(e.v)) || (sa.count(e.v) && sb.count(e.u)))
            out.push_back(e.id);
    }
    return out;
}

// Host edges inside the set that some spanning tree can avoid (loops plus
// non-tree edges); these become pattern loops after contraction.
std::vector<EdgeId> spare_intra_edges(const MultiGraph& host, const std::vector<VertexId>& set) {
    std::set<VertexId> s(set.begin(), set.end());
    std::vector<EdgeId> loops, nonloop;
    for (const Edge& e : host.edges()) {
        if (!s.count(e.u) || !s.count(e.v)) continue;
        (e.is_loop() ? loops : nonloop).push_back(e.id);
    }
    // grow a BFS tree over non-loop intra edges
    std::set<VertexId> seen{set.front()};
    std::set<EdgeId> tree;
    bool grew = true;
    while (grew) {
        grew = false;
        for (EdgeId id : nonloop) {
            if (tree.count(id)) continue;
            const Edge& e = host.edge(id);
            bool su = seen.count(e.u) != 0, sv = seen.count(e.v) != 0;
            if (su == sv) continue;
            seen.insert(su ? e.v : e.u);
            tree.insert(id);
            grew = true;
        }
    }
    std::vector<EdgeId> out = loops;
    for (EdgeId id : nonloop)
        if (!tree.count(id)) out.push_back(id);
    return out;
}

}  // namespace

std::optional<MinorModel> has_minor(const MultiGraph& host, const MultiGraph& pattern,
                                    const OracleLimits& limits) {
    if (pattern.vertex_count() > 6)
        throw CapExceeded("minor oracle supports patterns with at most 6 vertices");
    if (static_cast<int>(host.vertex_count()) > limits.host_cap)
        throw CapExceeded("minor oracle host cap exceeded (cap " +
                          std::to_string(limits.host_cap) + " vertices)");
    if (host.vertex_count() < pattern.vertex_count()) return std::nullopt;

    PatternInfo pat;
    pat.ids.assign(pattern.vertices().begin(), pattern.vertices().end());
    for (std::size_t i = 0; i < pat.ids.size(); ++i) pat.index[pat.ids[i]] = static_cast<int>(i);
    pat.loop_demand.assign(pat.ids.size(), 0);
    std::map<std::pair<int, int>, int> pair_mult;
    for (const Edge& e : pattern.edges()) {
        int a = pat.index[e.u], b = pat.index[e.v];
        if (a == b)
            pat.loop_demand[a] += 1;
        else
            pair_mult[std::minmax(a, b)] += 1;
    }
    for (const auto& [key, m] : pair_mult)
        pat.pair_demand.push_back({key.first, key.second, m});

    HostInfo hg;
    hg.ids.assign(host.vertices().begin(), host.vertices().end());
    for (std::size_t i = 0; i < hg.ids.size(); ++i) hg.index[hg.ids[i]] = static_cast<int>(i);
    int n = static_cast<int>(hg.ids.size());
    hg.mult.assign(n, std::vector<int>(n, 0));
    hg.loop_count.assign(n, 0);
    for (const Edge& e : host.edges()) {
        int a = hg.index[e.u], b = hg.index[e.v];
        if (a == b) {
            hg.loop_count[a] += 1;
        } else {
            hg.mult[a][b] += 1;
            hg.mult[b][a] += 1;
        }
    }
    hg.adj.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (hg.mult[a][b] > 0) hg.adj[a].push_back(b);

    MinorSearch search(pat, hg, limits.state_budget);
    if (!search.search()) return std::nullopt;

    MinorModel model;
    for (int i = 0; i < static_cast<int>(pat.ids.size()); ++i) {
        std::vector<VertexId> set;
        for (int v = 0; v < n; ++v)
            if (search.cls[v] == i) set.push_back(hg.ids[v]);
        model.branch_sets[pat.ids[i]] = set;
    }
    // assign concrete host edges, distinct across pattern edges
    std::set<EdgeId> taken;
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pool;
    for (const Edge& e : pattern.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!pool.count(key)) {
            pool[key] = e.is_loop()
                            ? spare_intra_edges(host, model.branch_sets.at(e.u))
                            : host_edges_between_sets(host, model.branch_sets.at(e.u),
                                                      model.branch_sets.at(e.v));
        }
        auto& candidates = pool[key];
        bool assigned = false;
        for (EdgeId c : candidates) {
            if (taken.count(c)) continue;
            model.edge_assignment[e.id] = c;
            taken.insert(c);
            assigned = true;
            break;
        }
        if (!assigned) throw SearchFailure("minor search produced an unassignable state");
    }
    return model;
}

bool verify_minor_model(const MultiGraph& host, const MultiGraph& pattern,
                        const MinorModel& model) {
    // branch sets: exactly one nonempty set per pattern vertex, disjoint,
    // valid host vertices
    if (model.branch_sets.size() != pattern.vertex_count()) return false;
    std::set<VertexId> used;
    for (const auto& [pv, set] : model.branch_sets) {
        if (!pattern.has_vertex(pv) || set.empty()) return false;
        for (VertexId v : set) {
            if (!host.has_vertex(v)) return false;
            if (!used.insert(v).second) return false;
        }
    }
    // connectivity of each induced branch set
    for (const auto& [pv, set] : model.branch_sets) {
        std::set<VertexId> s(set.begin(), set.end());
        std::set<VertexId> seen{set.front()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : host.edges()) {
                if (!s.count(e.u) || !s.count(e.v)) continue;
                bool su = seen.count(e.u) != 0, sv = seen.count(e.v) != 0;
                if (su == sv) continue;
                seen.insert(su ? e.v : e.u);
                grew = true;
            }
        }
        if (seen.size() != s.size()) return false;
    }
    // edge assignment: every pattern edge, distinct host edges, correct
    // attachment
    if (model.edge_assignment.size() != pattern.edge_count()) return false;
    std::set<EdgeId> taken;
    for (const Edge& pe : pattern.edges()) {
        auto it = model.edge_assignment.find(pe.id);
        if (it == model.edge_assignment.end()) return false;
        if (!host.has_edge(it->second)) return false;
        if (!taken.insert(it->second).second) return false;
        const Edge& he = host.edge(it->second);
        const auto& bu = model.branch_sets.at(pe.u);
        const auto& bv = model.branch_sets.at(pe.v);
        auto contains = [](const std::vector<VertexId>& s, VertexId v) {
            return std::find(s.begin(), s.end(), v) != s.end();
        };
        if (pe.is_loop()) {
            if (!contains(bu, he.u) || !contains(bu, he.v)) return false;
            if (!he.is_loop()) {
                // the set must stay connected without this edge (a spanning
                // tree avoiding it must exist)
                std::set<VertexId> s(bu.begin(), bu.end());
                std::set<VertexId> seen{bu.front()};
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (const Edge& e : host.edges()) {
                        if (e.id == he.id) continue;
                        if (!s.count(e.u) || !s.count(e.v)) continue;
                        bool su = seen.count(e.u) != 0, sv = seen.count(e.v) != 0;
                        if (su == sv) continue;
                        seen.insert(su ? e.v : e.u);
                        grew = true;
                    }
                }
                if (seen.size() != s.size()) return false;
            }
        } else {
            bool uv = contains(bu, he.u) && contains(bv, he.v);
            bool vu = contains(bu, he.v) && contains(bv, he.u);
            if (!uv && !vu) return false;
        }
    }
    return true;
}

bool is_planar(const MultiGraph& g, const OracleLimits& limits) {
    MultiGraph s = simplify(g);
    if (has_minor(s, complete_graph(5), limits)) return false;
    if (has_minor(s, complete_bipartite(3, 3), limits)) return false;
    return true;
}

}  // namespace toral
