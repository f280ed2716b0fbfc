#include "toral/lemmas.hpp"

#include <algorithm>
#include <numeric>

#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"

namespace toral {

// ---------------- Lemma 1 ----------------

Lemma1Certificate lemma1_k5(int p, int q, int r, int s) {
    if (p < 2 || q < 3 || std::gcd(p, q) != 1)
        throw InvalidInput("lemma1 requires coprime p >= 2, q >= 3");
    if (r < 1 || s < 1 || std::gcd(r, s) != 1)
        throw InvalidInput("lemma1 requires coprime r, s >= 1");

    CurveSpec knot{{p, q}, 1, Rat(0), false};
    CurveSpec anchored{{r, -s}, 1, Rat(0), true};
    Lemma1Certificate cert;
    cert.arrangement = arrangement_adjusted({knot, anchored});
    cert.specs = arrangement_specs(cert.arrangement);

    bool found = false;
    for_each_corner_path(cert.arrangement, [&](const CornerPath& path) {
        try {
            cert.s_reduction = reduce_arrangement_to_S(cert.arrangement, path);
        } catch (const Error&) {
            return false;  // try the next path
        }
        cert.path = path;
        found = true;
        return true;
    });
    if (!found)
        throw SearchFailure("no corner path reduces the arrangement; "
                            "this signals an arrangement-construction bug");
    cert.reduction = reduce_to_K5(cert.s_reduction.spec);
    return cert;
}

namespace {

bool fail(std::string* diagnostic, const std::string& message) {
    if (diagnostic) *diagnostic = message;
    return false;
}

}  // namespace

bool verify_lemma1(const Lemma1Certificate& cert, std::string* diagnostic) {
    try {
        validate_embedding(cert.arrangement);
    } catch (const Error& e) {
        return fail(diagnostic, std::string("arrangement invalid: ") + e.what());
    }
    if (!check_corner_path(cert.arrangement, cert.path))
        return fail(diagnostic, "corner path invalid");
    MultiGraph replayed;
    try {
        replayed = apply_ops(cert.arrangement.graph, cert.s_reduction.ops);
    } catch (const Error& e) {
        return fail(diagnostic, std::string("reduction replay failed: ") + e.what());
    }
    if (!check_isomorphism(replayed, build_S(cert.s_reduction.spec), cert.s_reduction.iso))
        return fail(diagnostic, "reduced arrangement does not match S(p,q)");
    if (!(cert.reduction.initial == cert.s_reduction.spec))
        return fail(diagnostic, "reduction certificate starts at the wrong spec");
    std::string inner;
    if (!verify_certificate(cert.reduction, &inner))
        return fail(diagnostic, "reduction certificate invalid: " + inner);
    return true;
}

// ---------------- K3,3 subdivisions ----------------

bool check_k33_subdivision(const MultiGraph& g, const K33Subdivision& sub) {
    std::set<VertexId> branch(sub.branch.begin(), sub.branch.end());
    if (branch.size() != 6) return false;
    for (VertexId v : branch)
        if (!g.has_vertex(v)) return false;

    MultiGraph k33 = complete_bipartite(3, 3);
    std::set<VertexId> used_interior;
    std::set<EdgeId> used_edges;
    for (std::size_t r = 0; r < 9; ++r) {
        const Edge& pe = k33.edges()[r];
        VertexId from = sub.branch[pe.u];
        VertexId to = sub.branch[pe.v];
        const auto& path = sub.paths[r];
        if (path.empty()) return false;
        VertexId at = from;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (!g.has_edge(path[i])) return false;
            if (!used_edges.insert(path[i]).second) return false;
            const Edge& e = g.edge(path[i]);
            if (e.u != at && e.v != at) return false;
            at = e.other(at);
            bool last = i + 1 == path.size();
            if (last) {
                if (at != to) return false;
            } else {
                if (branch.count(at)) return false;  // interior hits a branch vertex
                if (!used_interior.insert(at).second) return false;  // paths overlap
            }
        }
    }
    return true;
}

MinorModel subdivision_to_minor_model(const MultiGraph& g, const K33Subdivision& sub) {
    MinorModel model;
    MultiGraph k33 = complete_bipartite(3, 3);
    for (int i = 0; i < 6; ++i) model.branch_sets[i] = {sub.branch[i]};
    for (std::size_t r = 0; r < 9; ++r) {
        const Edge& pe = k33.edges()[r];
        const auto& path = sub.paths[r];
        VertexId at = sub.branch[pe.u];
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            at = g.edge(path[i]).other(at);
            model.branch_sets[pe.u].push_back(at);  // interior joins the left set
        }
        model.edge_assignment[pe.id] = path.back();
    }
    return model;
}

// ---------------- Lemma 2 ----------------

namespace {

struct CurveCycle {
    std::vector<VertexId> verts;  // cyclic, along the curve orientation
    std::vector<EdgeId> edges;    // edges[i] joins verts[i] -> verts[i+1]
    std::map<VertexId, int> index;
};

CurveCycle trace_curve(const TorusGraph& tg, int curve) {
    CurveCycle cycle;
    std::map<VertexId, std::pair<EdgeId, VertexId>> next;
    for (const Edge& e : tg.graph.edges()) {
        auto it = tg.edge_curve.find(e.id);
        if (it == tg.edge_curve.end() || it->second != curve) continue;
        next[e.u] = {e.id, e.v};
    }
    if (next.empty()) throw InvalidInput("curve has no edges");
    VertexId start = next.begin()->first;
    VertexId at = start;
    do {
        auto [eid, to] = next.at(at);
        cycle.index[at] = static_cast<int>(cycle.verts.size());
        cycle.verts.push_back(at);
        cycle.edges.push_back(eid);
        at = to;
    } while (at != start);
    return cycle;
}

// the other curve passing through a crossing vertex
int partner_curve(const TorusGraph& tg, VertexId v, int self) {
    for (EdgeId e : tg.graph.incident_edges(v)) {
        auto it = tg.edge_curve.find(e);
        if (it != tg.edge_curve.end() && it->second != self) return it->second;
    }
    return -1;
}

struct ArcWalk {
    std::vector<EdgeId> edges;
    std::vector<VertexId> interior;
    VertexId end = -1;
};

// walk from verts[i0] in direction d (+1/-1) until `stop` holds at a
// vertex; returns nullopt after a full loop
std::optional<ArcWalk> walk_until(const CurveCycle& c, int i0, int d,
                                  const std::function<bool(VertexId)>& stop) {
    int n = static_cast<int>(c.verts.size());
    ArcWalk walk;
    int i = i0;
    for (int steps = 0; steps < n; ++steps) {
        int edge_index = d > 0 ? i : (i - 1 + n) % n;
        int j = (i + d + n) % n;
        walk.edges.push_back(c.edges[edge_index]);
        if (stop(c.verts[j])) {
            walk.end = c.verts[j];
            return walk;
        }
        walk.interior.push_back(c.verts[j]);
        i = j;
    }
    return std::nullopt;
}

std::optional<Lemma2Certificate> lemma2_recipe(const TorusGraph& tg, int k) {
    // curves 0..k-1 carry class (p,q); curves k..2k-1 carry (p,-q)
    auto is_a_copy = [&](int c) { return c >= 0 && c < k; };
    CurveCycle c1 = trace_curve(tg, k);  // first copy of the mirror family

    int n1 = static_cast<int>(c1.verts.size());
    for (int start = 0; start < n1; ++start) {
        for (int d : {1, -1}) {
            VertexId p1 = c1.verts[start];
            int ca = partner_curve(tg, p1, k);
            if (!is_a_copy(ca)) continue;

            // along c_1: p3 (new copy cb), then p2 (ca again), then p4 (cb)
            auto w13 = walk_until(c1, start, d, [&](VertexId v) {
                return is_a_copy(partner_curve(tg, v, k));
            });
            if (!w13) continue;
            VertexId p3 = w13->end;
            int cb = partner_curve(tg, p3, k);
            if (cb == ca) continue;
            auto w32 = walk_until(c1, c1.index.at(p3), d, [&](VertexId v) {
                return partner_curve(tg, v, k) == ca;
            });
            if (!w32) continue;
            VertexId p2 = w32->end;
            auto w24 = walk_until(c1, c1.index.at(p2), d, [&](VertexId v) {
                return partner_curve(tg, v, k) == cb;
            });
            if (!w24) continue;
            VertexId p4 = w24->end;
            std::set<VertexId> corners{p1, p3, p2, p4};
            if (corners.size() != 4) continue;
            auto w41 = walk_until(c1, c1.index.at(p4), d,
                                  [&](VertexId v) { return v == p1; });
            if (!w41) continue;
            // the four c_1 arcs must stay clear of the other corner points
            auto clear_of_corners = [&](const ArcWalk& w) {
                for (VertexId v : w.interior)
                    if (corners.count(v)) return false;
                return true;
            };
            if (!clear_of_corners(*w13) || !clear_of_corners(*w32) ||
                !clear_of_corners(*w24) || !clear_of_corners(*w41))
                continue;

            // segment (p1,p2) along ca avoiding further c_1 crossings
            CurveCycle cc_a = trace_curve(tg, ca);
            std::optional<ArcWalk> seg12;
            for (int dd : {1, -1}) {
                auto w = walk_until(cc_a, cc_a.index.at(p1), dd,
                                    [&](VertexId v) { return v == p2 ||
                                                        partner_curve(tg, v, ca) == k; });
                if (w && w->end == p2) {
                    seg12 = w;
                    break;
                }
            }
            if (!seg12) continue;
            CurveCycle cc_b = trace_curve(tg, cb);
            std::optional<ArcWalk> seg34;
            for (int dd : {1, -1}) {
                auto w = walk_until(cc_b, cc_b.index.at(p3), dd,
                                    [&](VertexId v) { return v == p4 ||
                                                        partner_curve(tg, v, cb) == k; });
                if (w && w->end == p4) {
                    seg34 = w;
                    break;
                }
            }
            if (!seg34) continue;

            // p5 on (p1,p2) and p6 on (p3,p4), both on the same second
            // mirror copy c2, joined inside the disc
            for (VertexId p5 : seg12->interior) {
                int c2 = partner_curve(tg, p5, ca);
                if (is_a_copy(c2) || c2 == k) continue;
                VertexId p6 = -1;
                for (VertexId v : seg34->interior)
                    if (partner_curve(tg, v, cb) == c2) p6 = v;
                if (p6 == -1) continue;
                CurveCycle cc_2 = trace_curve(tg, c2);
                std::optional<ArcWalk> seg56;
                for (int dd : {1, -1}) {
                    auto w = walk_until(cc_2, cc_2.index.at(p5), dd, [&](VertexId v) {
                        int pc = partner_curve(tg, v, c2);
                        return pc == ca || pc == cb;
                    });
                    if (w && w->end == p6) {
                        seg56 = w;
                        break;
                    }
                }
                if (!seg56) continue;

                // split (p1,p2) at p5 and (p3,p4) at p6
                auto split_at = [](const ArcWalk& w, VertexId at, VertexId from) {
                    std::pair<std::vector<EdgeId>, std::vector<EdgeId>> parts;
                    bool second = false;
                    VertexId cur = from;
                    for (std::size_t i = 0; i < w.edges.size(); ++i) {
                        (second ? parts.second : parts.first).push_back(w.edges[i]);
                        cur = i < w.interior.size() ? w.interior[i] : w.end;
                        if (cur == at) second = true;
                    }
                    return parts;
                };
                auto [e15, e52] = split_at(*seg12, p5, p1);
                auto [e36, e64] = split_at(*seg34, p6, p3);

                // K3,3 with parts {p1, p2, p6} and {p3, p4, p5}:
                // edges ordered as complete_bipartite(3,3):
                // (p1,p3) (p1,p4) (p1,p5) (p2,p3) (p2,p4) (p2,p5)
                // (p6,p3) (p6,p4) (p6,p5); each path listed from the left
                // endpoint
                auto reversed = [](std::vector<EdgeId> v) {
                    std::reverse(v.begin(), v.end());
                    return v;
                };
                K33Subdivision sub;
                sub.branch = {p1, p2, p6, p3, p4, p5};
                sub.paths[0] = w13->edges;              // p1 - p3
                sub.paths[1] = reversed(w41->edges);    // p1 - p4 (rest of c_1)
                sub.paths[2] = e15;                     // p1 - p5
                sub.paths[3] = reversed(w32->edges);    // p2 - p3
                sub.paths[4] = w24->edges;              // p2 - p4
                sub.paths[5] = reversed(e52);           // p2 - p5
                sub.paths[6] = reversed(e36);           // p6 - p3
                sub.paths[7] = e64;                     // p6 - p4
                sub.paths[8] = reversed(seg56->edges);  // p6 - p5

                if (!check_k33_subdivision(tg.graph, sub)) continue;
                MinorModel model = subdivision_to_minor_model(tg.graph, sub);
                if (!verify_minor_model(tg.graph, complete_bipartite(3, 3), model)) continue;
                Lemma2Certificate cert;
                cert.arrangement = tg;
                cert.specs = arrangement_specs(tg);
                cert.subdivision = sub;
                cert.model = model;
                return cert;
            }
        }
    }
    return std::nullopt;
}

// fallback: convert a branch-set witness into a subdivision
std::optional<K33Subdivision> model_to_subdivision(const MultiGraph& g,
                                                   const MinorModel& model) {
    MultiGraph k33 = complete_bipartite(3, 3);
    K33Subdivision sub;

    // per branch set: BFS tree and pairwise tree paths
    std::map<VertexId, std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>>> trees;
    for (const auto& [pv, set] : model.branch_sets) {
        std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> paths;  // from root
        std::set<VertexId> in_set(set.begin(), set.end());
        VertexId root = set.front();
        paths[root] = {};
        std::vector<VertexId> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (EdgeId eid : g.incident_edges(v)) {
                const Edge& e = g.edge(eid);
                VertexId w = e.other(v);
                if (!in_set.count(w) || paths.count(w) || e.is_loop()) continue;
                paths[w] = paths[v];
                paths[w].push_back({eid, w});
                queue.push_back(w);
            }
        }
        trees[pv] = std::move(paths);
    }

    // attachment vertex of each pattern edge inside each branch set
    std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> attach;  // pv -> (pe, vertex)
    for (const Edge& pe : k33.edges()) {
        EdgeId he = model.edge_assignment.at(pe.id);
        const Edge& h = g.edge(he);
        const auto& bu = model.branch_sets.at(pe.u);
        bool u_has_hu = std::find(bu.begin(), bu.end(), h.u) != bu.end();
        attach[pe.u].push_back({pe.id, u_has_hu ? h.u : h.v});
        attach[pe.v].push_back({pe.id, u_has_hu ? h.v : h.u});
    }

    // branch vertex = tree median of the three attachments: the deepest of
    // the three pairwise lowest common ancestors, which makes the three
    // tree paths out of it pairwise disjoint
    std::map<VertexId, VertexId> median;
    for (const auto& [pv, list] : attach) {
        const auto& paths = trees.at(pv);
        std::array<std::vector<VertexId>, 3> seqs;
        for (int i = 0; i < 3; ++i) {
            seqs[i] = {model.branch_sets.at(pv).front()};
            for (const auto& [eid, v] : paths.at(list[i].second)) seqs[i].push_back(v);
        }
        VertexId best = model.branch_sets.at(pv).front();
        std::size_t best_depth = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::size_t d = 0;
                while (d + 1 < seqs[i].size() && d + 1 < seqs[j].size() &&
                       seqs[i][d + 1] == seqs[j][d + 1])
                    ++d;
                if (d >= best_depth) {
                    best_depth = d;
                    best = seqs[i][d];
                }
            }
        median[pv] = best;
    }

    for (int i = 0; i < 6; ++i) sub.branch[i] = median.at(i);

    // path for pattern edge: median_u -> attach_u, host edge, attach_v -> median_v
    for (const Edge& pe : k33.edges()) {
        EdgeId he = model.edge_assignment.at(pe.id);
        const Edge& h = g.edge(he);
        const auto& bu = model.branch_sets.at(pe.u);
        bool u_has_hu = std::find(bu.begin(), bu.end(), h.u) != bu.end();
        VertexId au = u_has_hu ? h.u : h.v;
        VertexId av = u_has_hu ? h.v : h.u;

        auto tree_path_edges = [&](VertexId pv, VertexId target) {
            const auto& paths = trees.at(pv);
            std::vector<EdgeId> root_to_target, root_to_median;
            for (const auto& [eid, v] : paths.at(target)) root_to_target.push_back(eid);
            for (const auto& [eid, v] : paths.at(median.at(pv))) root_to_median.push_back(eid);
            // strip the common prefix; remaining = median -> target (via root)
            std::size_t common = 0;
            while (common < root_to_target.size() && common < root_to_median.size() &&
                   root_to_target[common] == root_to_median[common])
                ++common;
            std::vector<EdgeId> out;
            for (std::size_t i = root_to_median.size(); i > common; --i)
                out.push_back(root_to_median[i - 1]);
            for (std::size_t i = common; i < root_to_target.size(); ++i)
                out.push_back(root_to_target[i]);
            return out;
        };

        std::vector<EdgeId> path = tree_path_edges(pe.u, au);
        path.push_back(he);
        std::vector<EdgeId> tail = tree_path_edges(pe.v, av);
        std::reverse(tail.begin(), tail.end());
        path.insert(path.end(), tail.begin(), tail.end());
        sub.paths[pe.id] = path;
    }
    if (!check_k33_subdivision(g, sub)) return std::nullopt;
    return sub;
}

}  // namespace

Lemma2Certificate lemma2_k33(int k, int p, int q) {
    if (k < 2) throw InvalidInput("lemma2 requires k >= 2");
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw InvalidInput("lemma2 requires coprime nonzero p, q");

    CurveSpec pos{{p, q}, k, Rat(0), false};
    CurveSpec neg{{p, -q}, k, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({pos, neg});

    if (auto cert = lemma2_recipe(tg, k)) return *cert;

    // fallback: generic minor search, only workable on small arrangements
    if (tg.graph.vertex_count() <= 40) {
        OracleLimits limits;
        limits.host_cap = static_cast<int>(tg.graph.vertex_count());
        auto model = has_minor(tg.graph, complete_bipartite(3, 3), limits);
        if (model) {
            if (auto sub = model_to_subdivision(tg.graph, *model)) {
                Lemma2Certificate cert;
                cert.arrangement = tg;
                cert.specs = arrangement_specs(tg);
                cert.subdivision = *sub;
                cert.model = subdivision_to_minor_model(tg.graph, *sub);
                cert.used_fallback = true;
                if (verify_minor_model(tg.graph, complete_bipartite(3, 3), cert.model))
                    return cert;
            }
        }
    }
    throw SearchFailure("lemma2 recipe and fallback both failed; "
                        "this signals an arrangement bug");
}

bool verify_lemma2(const Lemma2Certificate& cert, std::string* diagnostic) {
    try {
        validate_embedding(cert.arrangement);
    } catch (const Error& e) {
        return fail(diagnostic, std::string("arrangement invalid: ") + e.what());
    }
    if (!check_k33_subdivision(cert.arrangement.graph, cert.subdivision))
        return fail(diagnostic, "K3,3 subdivision invalid");
    if (!verify_minor_model(cert.arrangement.graph, complete_bipartite(3, 3), cert.model))
        return fail(diagnostic, "minor model invalid");
    return true;
}

// ---------------- Lemma 3 ----------------

Lemma3Extension build_lemma3_extension() {
    Lemma3Extension ext;
    MultiGraph& g = ext.graph;
    // side A attachments 1,2,3; side B partners 4,5,6; 0 subdivides the
    // arc (1,2); Z subdivides the arc (5,6)
    g.add_vertex(0, "0");
    for (int i = 1; i <= 6; ++i) g.add_vertex(i, std::to_string(i));
    g.add_vertex(7, "Z");
    ext.side_a = {1, 2, 3};
    ext.side_b = {4, 5, 6};
    ext.v0 = 0;
    ext.vz = 7;
    g.add_edge(0, 1, 0);  // side A: 1 - 0 - 2 - 3 - 1
    g.add_edge(1, 0, 2);
    g.add_edge(2, 2, 3);
    g.add_edge(3, 3, 1);
    g.add_edge(4, 4, 5);  // side B: 4 - 5 - Z - 6 - 4
    g.add_edge(5, 5, 7);
    g.add_edge(6, 7, 6);
    g.add_edge(7, 6, 4);
    g.add_edge(8, 1, 4);  // rungs
    g.add_edge(9, 2, 5);
    g.add_edge(10, 3, 6);
    ext.rungs = {8, 9, 10};
    g.add_edge(11, 0, 7);  // the extra edge (0,Z)
    ext.extra_edge = 11;
    return ext;
}

Lemma3Result lemma3_minor(const Lemma3Extension& ext) {
    const MultiGraph& g = ext.graph;
    auto arc = [&](VertexId a, VertexId b) {
        std::vector<EdgeId> edges = g.edges_between(a, b);
        if (edges.size() != 1)
            throw InvalidInput("extension is malformed: expected a unique arc between " +
                               std::to_string(a) + " and " + std::to_string(b));
        return edges.front();
    };
    // delete the side arc between attachments 3 and 1, contract the arcs
    // (1,0) and (2,3)
    Lemma3Result result;
    result.ops = {DeleteOp{arc(ext.side_a[2], ext.side_a[0])},
                  ContractOp{arc(ext.side_a[0], ext.v0)},
                  ContractOp{arc(ext.side_a[1], ext.side_a[2])}};
    result.reduced = apply_ops(g, result.ops);

    auto iso = is_isomorphic(result.reduced, complete_bipartite(3, 3), 6);
    if (!iso) throw SearchFailure("extension did not reduce to K3,3");
    result.iso_to_k33 = *iso;
    MultiGraph k33 = complete_bipartite(3, 3);

    // branch sets: the two merged pairs plus singletons
    std::map<VertexId, std::vector<VertexId>> merged;
    for (VertexId v : g.vertices()) merged[v] = {v};
    for (const ReplayOp& op : result.ops) {
        if (!std::holds_alternative<ContractOp>(op)) continue;
        const Edge& e = g.edge(std::get<ContractOp>(op).edge);
        VertexId keep = std::min(e.u, e.v), drop = std::max(e.u, e.v);
        auto moved = merged.at(drop);
        merged.erase(drop);
        merged[keep].insert(merged[keep].end(), moved.begin(), moved.end());
    }
    for (const auto& [rv, set] : merged) result.model.branch_sets[result.iso_to_k33.at(rv)] = set;
    for (const Edge& pe : k33.edges()) {
        // the reduced edge joining the two images keeps its extension id
        VertexId ru = -1, rv = -1;
        for (const auto& [r, pat] : result.iso_to_k33) {
            if (pat == pe.u) ru = r;
            if (pat == pe.v) rv = r;
        }
        auto edges = result.reduced.edges_between(ru, rv);
        if (edges.size() != 1) throw SearchFailure("reduced graph is not simple K3,3");
        result.model.edge_assignment[pe.id] = edges.front();
    }
    return result;
}

bool verify_lemma3(const Lemma3Extension& ext, const Lemma3Result& result,
                   std::string* diagnostic) {
    int deletions = 0, contractions = 0;
    for (const ReplayOp& op : result.ops)
        (std::holds_alternative<DeleteOp>(op) ? deletions : contractions) += 1;
    if (deletions != 1 || contractions != 2)
        return fail(diagnostic, "expected exactly 1 deletion and 2 contractions");
    MultiGraph replayed;
    try {
        replayed = apply_ops(ext.graph, result.ops);
    } catch (const Error& e) {
        return fail(diagnostic, std::string("replay failed: ") + e.what());
    }
    if (!check_isomorphism(replayed, complete_bipartite(3, 3), result.iso_to_k33))
        return fail(diagnostic, "result is not isomorphic to K3,3");
    if (!verify_minor_model(ext.graph, complete_bipartite(3, 3), result.model))
        return fail(diagnostic, "minor model on the extension is invalid");
    return true;
}

}  // namespace toral
