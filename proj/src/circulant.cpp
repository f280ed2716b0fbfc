#include "toral/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"

namespace toral {

CirculantSpec::CirculantSpec(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw InvalidInput("circulant spec requires p,q >= 1");
    if (std::gcd(p, q) != 1)
        throw InvalidInput("circulant spec requires gcd(p,q) = 1, got (" + std::to_string(p) +
                           "," + std::to_string(q) + ")");
    if (p + q < 3) throw InvalidInput("circulant spec requires p+q >= 3");
}

CirculantSpec CirculantSpec::normalized() const {
    return p <= q ? *this : CirculantSpec(q, p);
}

MultiGraph build_S(const CirculantSpec& spec) {
    int m = spec.order();
    MultiGraph g;
    for (int j = 0; j < m; ++j) g.add_vertex(j, "v" + std::to_string(j));
    for (int j = 0; j < m; ++j) g.add_edge(j, j, (j + 1) % m, "C" + std::to_string(j));
    for (int j = 0; j < m; ++j)
        g.add_edge(m + j, j, (j + spec.p) % m, "c" + std::to_string(j));
    return g;
}

bool cayley_check(const CirculantSpec& spec) {
    int m = spec.order();
    MultiGraph cayley;
    for (int e = 0; e < m; ++e) cayley.add_vertex(e);
    // one edge per group element and generator
    for (int g : {1, spec.p})
        for (int e = 0; e < m; ++e) cayley.add_edge(e, (e + g) % m);
    return is_isomorphic(build_S(spec), cayley, m).has_value();
}

ReductionStep minor_step(const CirculantSpec& spec, bool allow_skip) {
    CirculantSpec s = spec.normalized();
    if (s.p < 2 || s.q < 3) throw InvalidInput("minor step requires p >= 2, q >= 3");
    int m = s.order();
    if (s.p == 2) {
        if (!allow_skip)
            throw InvalidInput("minor step is a proper minor only for p > 2");
        return SkipMinorData{s, "p=2: kept-chord formula keeps the whole graph"};
    }

    int t = m / s.p;
    MinorStepData step;
    step.from = s;
    step.to = CirculantSpec(2, 2 * t - 1);

    // chords traveled from v_0 by repeated +p steps
    std::set<int> kept;
    for (int j = 0; j <= 2 * t; ++j) {
        int idx = static_cast<int>((static_cast<long>(j) * s.p) % m);
        step.kept_chords.push_back(idx);
        kept.insert(idx);
    }
    for (int j = 0; j < m; ++j)
        if (!kept.count(j)) step.deleted_chords.push_back(j);

    // travel vertices: chord endpoints including the last chord's endpoint
    std::set<int> travel(kept.begin(), kept.end());
    int last_endpoint = static_cast<int>((static_cast<long>(2 * t + 1) * s.p) % m);
    travel.insert(last_endpoint);

    // collapse each maximal cyclic run of non-travel vertices into the
    // travel vertex preceding it: contract all run edges except the last
    for (int a : travel) {
        int x = (a + 1) % m;
        if (travel.count(x)) continue;  // no run after a
        while (!travel.count((x + 1) % m)) {
            step.contracted_cycle_edges.push_back(cycle_edge_id(s, (x + m - 1) % m));
            x = (x + 1) % m;
        }
        step.contracted_cycle_edges.push_back(cycle_edge_id(s, (x + m - 1) % m));
        // run absorbed into a; the edge (x, x+1) survives
    }

    // close up: contract the surviving cycle edge between the cluster of
    // v_0 and the cluster of the last chord endpoint
    {
        std::set<EdgeId> contracted(step.contracted_cycle_edges.begin(),
                                    step.contracted_cycle_edges.end());
        auto cluster_of = [&](int v) {
            // walk backwards to the nearest travel vertex
            while (!travel.count(v)) v = (v + m - 1) % m;
            return v;
        };
        int found = -1;
        for (int j = 0; j < m; ++j) {
            if (contracted.count(cycle_edge_id(s, j))) continue;
            int cu = cluster_of(j), cv = cluster_of((j + 1) % m);
            if ((cu == 0 && cv == last_endpoint) || (cu == last_endpoint && cv == 0)) {
                found = j;
                break;
            }
        }
        if (found < 0)
            throw SearchFailure("minor step: closing edge between v_0 and the travel endpoint "
                                "not found");
        step.contracted_cycle_edges.push_back(cycle_edge_id(s, found));
    }
    return step;
}

ReductionStep invert_relabel(const CirculantSpec& spec) {
    CirculantSpec s = spec.normalized();
    if (s.p != 2) throw InvalidInput("invert_relabel is defined on specs S(2,q)");
    if (s.q % 2 == 0) throw InvalidInput("invert_relabel requires q odd");
    int m = s.order();

    InvertRelabelData step;
    step.from = s;
    for (int c = 1; c < m; ++c)
        if ((2 * c) % m == 1) step.p_prime = c;
    step.q_prime = m - step.p_prime;
    step.to = CirculantSpec(step.q_prime, step.p_prime).normalized();
    step.permutation.resize(m);
    for (int j = 0; j < m; ++j)
        step.permutation[j] = static_cast<int>((static_cast<long>(j) * step.p_prime) % m);
    return step;
}

namespace {

CirculantSpec step_from(const ReductionStep& step) {
    if (const auto* ms = std::get_if<MinorStepData>(&step)) return ms->from;
    if (const auto* ir = std::get_if<InvertRelabelData>(&step)) return ir->from;
    return std::get<SkipMinorData>(step).spec;
}

CirculantSpec step_to(const ReductionStep& step) {
    if (const auto* ms = std::get_if<MinorStepData>(&step)) return ms->to;
    if (const auto* ir = std::get_if<InvertRelabelData>(&step)) return ir->to;
    return std::get<SkipMinorData>(step).spec;
}

}  // namespace

std::vector<ReplayOp> minor_step_ops(const MinorStepData& step) {
    std::vector<ReplayOp> ops;
    for (int d : step.deleted_chords) ops.push_back(DeleteOp{chord_edge_id(step.from, d)});
    for (EdgeId e : step.contracted_cycle_edges) ops.push_back(ContractOp{e});
    return ops;
}

ReductionCertificate reduce_to_K5(const CirculantSpec& spec) {
    CirculantSpec cur = spec.normalized();
    if (cur.p < 2 || cur.q < 3)
        throw InvalidInput("reduction requires p >= 2 and q >= 3 after normalization");

    ReductionCertificate cert;
    cert.initial = cur;
    while (!(cur.p == 2 && cur.q == 3)) {
        if (cur.p > 2) {
            ReductionStep step = minor_step(cur, false);
            cur = step_to(step);
            cert.steps.push_back(std::move(step));
        } else {
            cert.steps.push_back(minor_step(cur, true));  // SkipMinor
            ReductionStep step = invert_relabel(cur);
            cur = step_to(step);
            cert.steps.push_back(std::move(step));
        }
    }
    auto iso = is_isomorphic(build_S(CirculantSpec(2, 3)), complete_graph(5), 5);
    if (!iso) throw SearchFailure("S(2,3) failed to match K5");
    cert.final_isomorphism.resize(5);
    for (const auto& [a, b] : *iso) cert.final_isomorphism[a] = b;
    return cert;
}

std::vector<CirculantSpec> spec_chain(const ReductionCertificate& cert) {
    std::vector<CirculantSpec> chain{cert.initial};
    for (const ReductionStep& step : cert.steps) {
        CirculantSpec to = step_to(step);
        if (!(to == chain.back())) chain.push_back(to);
    }
    return chain;
}

bool chords_interleave(int order, int p, int x, int y) {
    if (x == y) return false;
    auto inside = [&](int lo, int v) {
        // strictly inside the cyclic open interval (lo, lo+p)
        int d = ((v - lo) % order + order) % order;
        return d > 0 && d < p;
    };
    bool y0 = inside(x, y), y1 = inside(x, (y + p) % order);
    return y0 != y1;
}

namespace {

bool fail(std::string* diagnostic, const std::string& message) {
    if (diagnostic) *diagnostic = message;
    return false;
}

}  // namespace

bool verify_certificate(const ReductionCertificate& cert, std::string* diagnostic) {
    CirculantSpec expected;
    try {
        expected = CirculantSpec(cert.initial.p, cert.initial.q).normalized();
    } catch (const Error& e) {
        return fail(diagnostic, std::string("bad initial spec: ") + e.what());
    }
    if (!(expected == cert.initial)) return fail(diagnostic, "initial spec not normalized");

    bool prev_was_skip = false;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const ReductionStep& step = cert.steps[i];
        if (!(step_from(step) == expected))
            return fail(diagnostic, "step " + std::to_string(i) + ": spec chain broken");

        if (const auto* ms = std::get_if<MinorStepData>(&step)) {
            prev_was_skip = false;
            int m = ms->from.order();
            if (ms->from.p <= 2)
                return fail(diagnostic, "minor step with p <= 2");
            std::set<int> kept(ms->kept_chords.begin(), ms->kept_chords.end()),
                deleted(ms->deleted_chords.begin(), ms->deleted_chords.end());
            if (kept.size() + deleted.size() != static_cast<std::size_t>(m))
                return fail(diagnostic, "kept/deleted chords do not partition the chord set");
            for (int k : kept)
                if (k < 0 || k >= m || deleted.count(k))
                    return fail(diagnostic, "kept/deleted chords overlap or out of range");
            MultiGraph g = build_S(ms->from);
            try {
                g = apply_ops(g, minor_step_ops(*ms));
            } catch (const Error& e) {
                return fail(diagnostic, std::string("minor step replay failed: ") + e.what());
            }
            if (ms->to.order() >= ms->from.order())
                return fail(diagnostic, "minor step does not shrink p+q");
            if (!is_isomorphic(g, build_S(ms->to), std::max(m, 8)))
                return fail(diagnostic,
                            "minor step result is not isomorphic to the declared spec");
            expected = ms->to;
        } else if (const auto* ir = std::get_if<InvertRelabelData>(&step)) {
            prev_was_skip = false;
            int m = ir->from.order();
            if (ir->from.p != 2) return fail(diagnostic, "invert step with p != 2");
            if ((2 * ir->p_prime) % m != 1)
                return fail(diagnostic, "p' is not the modular inverse of 2");
            if (ir->q_prime != m - ir->p_prime) return fail(diagnostic, "q' != (p+q) - p'");
            if (!(ir->to == CirculantSpec(ir->q_prime, ir->p_prime).normalized()))
                return fail(diagnostic, "invert result spec mismatch");
            if (ir->permutation.size() != static_cast<std::size_t>(m))
                return fail(diagnostic, "permutation size mismatch");
            std::set<int> image(ir->permutation.begin(), ir->permutation.end());
            if (image.size() != static_cast<std::size_t>(m) || *image.begin() != 0 ||
                *image.rbegin() != m - 1)
                return fail(diagnostic, "permutation is not a bijection");
            // relabeled edge multiset must equal build_S(to)
            std::multiset<std::pair<int, int>> relabeled, target;
            MultiGraph from_graph = build_S(ir->from), to_graph = build_S(ir->to);
            for (const Edge& e : from_graph.edges())
                relabeled.insert(std::minmax(ir->permutation[e.u], ir->permutation[e.v]));
            for (const Edge& e : to_graph.edges())
                target.insert(std::minmax(e.u, e.v));
            if (relabeled != target)
                return fail(diagnostic, "relabeled graph does not match the declared spec");
            expected = ir->to;
        } else {
            const auto& sk = std::get<SkipMinorData>(step);
            if (sk.spec.p != 2) return fail(diagnostic, "skip step with p != 2");
            if (prev_was_skip) return fail(diagnostic, "two consecutive skip steps");
            prev_was_skip = true;
        }
    }
    if (!(expected == CirculantSpec(2, 3)))
        return fail(diagnostic, "chain does not terminate at S(2,3)");
    if (cert.final_isomorphism.size() != 5)
        return fail(diagnostic, "final isomorphism must map the 5 vertices of S(2,3)");
    std::map<VertexId, VertexId> iso;
    for (int j = 0; j < 5; ++j) iso[j] = cert.final_isomorphism[j];
    if (!check_isomorphism(build_S(CirculantSpec(2, 3)), complete_graph(5), iso))
        return fail(diagnostic, "final isomorphism to K5 is invalid");
    return true;
}

}  // namespace toral
