#include "toral/hopf.hpp"

#include <algorithm>

#include "toral/errors.hpp"
#include "toral/homology.hpp"

namespace toral {

HopfLadder build_hopf_ladder(int n) {
    if (n < 0) throw InvalidInput("rung count must be nonnegative");
    HopfLadder ladder;
    ladder.rungs = n;

    if (n == 0) {
        CurveSpec spec;
        spec.cls = {1, 1};
        spec.copies = 2;
        spec.offset = make_rat(1, 4);
        ladder.realized = arrangement({spec});
        for (const Edge& e : ladder.realized.graph.edges()) {
            int curve = ladder.realized.edge_curve.at(e.id);
            (curve == 0 ? ladder.side_a_edges : ladder.side_b_edges).push_back(e.id);
        }
        return ladder;
    }

    TorusGraph tg;
    Geodesic side_a = build_geodesic({1, 1}, {Rat(0), make_rat(1, 4)});
    Geodesic side_b = build_geodesic({1, 1}, {Rat(0), make_rat(3, 4)});
    for (int side = 0; side < 2; ++side) {
        CurveRef ref;
        ref.spec_index = side;
        ref.copy_index = 0;
        ref.cls = {1, 1};
        ref.offset = side == 0 ? make_rat(1, 4) : make_rat(3, 4);
        tg.curves.push_back(ref);
    }

    // rung i sits at x_i in (0, 1/4); both attachment parameters equal x_i
    std::vector<Rat> xs;
    std::vector<std::pair<Rat, VertexId>> events_a, events_b;
    for (int i = 1; i <= n; ++i) {
        Rat x = make_rat(i, 4L * (n + 1));
        xs.push_back(x);
        VertexId va = i - 1, vb = n + i - 1;
        tg.graph.add_vertex(va, "v" + std::to_string(i));
        tg.graph.add_vertex(vb, "v'" + std::to_string(i));
        tg.position[va] = {x, x + make_rat(1, 4)};
        tg.position[vb] = {x, x + make_rat(3, 4)};
        ladder.side_a.push_back(va);
        ladder.side_b.push_back(vb);
        events_a.push_back({x, va});
        events_b.push_back({x, vb});
    }
    std::size_t before = tg.graph.edge_count();
    add_geodesic_edges(tg, side_a, events_a, 0);
    for (const Edge& e : tg.graph.edges())
        if (e.id >= static_cast<EdgeId>(before)) ladder.side_a_edges.push_back(e.id);
    before = tg.graph.edge_count();
    add_geodesic_edges(tg, side_b, events_b, 1);
    for (const Edge& e : tg.graph.edges())
        if (e.id >= static_cast<EdgeId>(before) &&
            std::find(ladder.side_a_edges.begin(), ladder.side_a_edges.end(), e.id) ==
                ladder.side_a_edges.end())
            ladder.side_b_edges.push_back(e.id);

    for (int i = 0; i < n; ++i) {
        EdgeId e = tg.graph.add_edge(ladder.side_a[i], ladder.side_b[i]);
        tg.edge_curve[e] = -1;
        tg.winding[e] = {0, 0};
        tg.geometry[e] = {tg.position[ladder.side_a[i]], tg.position[ladder.side_b[i]]};
        ladder.rung_edges.push_back(e);
    }
    ladder.realized = std::move(tg);
    return ladder;
}

LadderChirality classify_hopf_ladder(int n) {
    if (n < 0) throw InvalidInput("rung count must be nonnegative");
    return n <= 2 ? LadderChirality::Achiral : LadderChirality::Chiral;
}

namespace {

// +1 when the rung indices appear in increasing cyclic order along the
// curve parameter, -1 for decreasing.
int cyclic_orientation(const std::vector<std::pair<Rat, int>>& params_and_rungs) {
    std::vector<std::pair<Rat, int>> sorted = params_and_rungs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int n = static_cast<int>(sorted.size());
    std::vector<int> seq;
    for (const auto& [t, rung] : sorted) seq.push_back(rung);
    auto is_rotation_of = [&](bool reversed) {
        std::vector<int> target(n);
        for (int i = 0; i < n; ++i) target[i] = reversed ? (n - 1 - i) : i;
        for (int shift = 0; shift < n; ++shift) {
            bool match = true;
            for (int i = 0; i < n && match; ++i)
                if (seq[(shift + i) % n] != target[i]) match = false;
            if (match) return true;
        }
        return false;
    };
    if (is_rotation_of(false)) return 1;
    if (is_rotation_of(true)) return -1;
    throw InvalidInput("attachment order is not a ladder order");
}

}  // namespace

std::optional<SideOrientations> orientation_from_rungs(const HopfLadder& ladder) {
    if (ladder.rungs <= 2) return std::nullopt;
    const TorusGraph& tg = ladder.realized;

    // parameter along a (1,b) side is its x coordinate
    std::vector<std::pair<Rat, int>> params_a, params_b;
    for (int i = 0; i < ladder.rungs; ++i) {
        params_a.push_back({tg.position.at(ladder.side_a[i]).x, i});
        params_b.push_back({tg.position.at(ladder.side_b[i]).x, i});
    }
    SideOrientations out;
    out.side_a = cyclic_orientation(params_a);
    out.side_b = cyclic_orientation(params_b);

    HomologyClass cls_a = cycle_class(tg, ladder.side_a_edges);
    HomologyClass cls_b = cycle_class(tg, ladder.side_b_edges);
    if (normalize_unoriented(cls_a) != normalize_unoriented(cls_b))
        throw InvalidInput("ladder sides are not parallel");
    out.linking = out.side_a * out.side_b * linking_number(normalize_unoriented(cls_a));
    return out;
}

HopfLadder mirror_ladder(const HopfLadder& ladder) {
    HopfLadder out = ladder;
    out.realized = mirror_embedding(ladder.realized);
    return out;
}

HopfLadder rotate_rung_labels(const HopfLadder& ladder, int shift) {
    HopfLadder out = ladder;
    int n = ladder.rungs;
    if (n == 0) return out;
    shift = ((shift % n) + n) % n;
    for (int i = 0; i < n; ++i) {
        out.side_a[i] = ladder.side_a[(i + shift) % n];
        out.side_b[i] = ladder.side_b[(i + shift) % n];
        out.rung_edges[i] = ladder.rung_edges[(i + shift) % n];
    }
    return out;
}

}  // namespace toral
