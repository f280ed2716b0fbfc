#include "toral/classify.hpp"

#include "doctest.h"
#include "toral/errors.hpp"

using namespace toral;

namespace {

TorusGraph knot_cycle(long a, long b) {
    CurveSpec spec{{a, b}, 1, Rat(0), false};
    return arrangement_adjusted({spec});
}

// two disjoint (1,2) cycles joined by a short vertical bridge
TorusGraph linked_cycles_with_bridge() {
    TorusGraph tg;
    Geodesic side_a = build_geodesic({1, 2}, {Rat(0), make_rat(1, 4)});
    Geodesic side_b = build_geodesic({1, 2}, {Rat(0), make_rat(3, 4)});
    for (int side = 0; side < 2; ++side) {
        CurveRef ref;
        ref.spec_index = side;
        ref.copy_index = 0;
        ref.cls = {1, 2};
        ref.offset = side == 0 ? make_rat(1, 4) : make_rat(3, 4);
        tg.curves.push_back(ref);
    }
    Rat x = make_rat(1, 16);
    tg.graph.add_vertex(0);
    tg.graph.add_vertex(1);
    tg.position[0] = {x, x * 2 + make_rat(1, 4)};  // (1/16, 3/8)
    tg.position[1] = {x, x * 2 + make_rat(3, 4)};  // (1/16, 7/8)
    add_geodesic_edges(tg, side_a, {{x, 0}}, 0);
    add_geodesic_edges(tg, side_b, {{x, 1}}, 1);
    EdgeId bridge = tg.graph.add_edge(0, 1);
    tg.winding[bridge] = {0, 0};
    tg.geometry[bridge] = {tg.position[0], tg.position[1]};
    tg.edge_curve[bridge] = -1;
    validate_embedding(tg);
    return tg;
}

TorusGraph disk_patch_grid() {
    TorusGraph tg;
    Rat base = make_rat(1, 4), step = make_rat(1, 4);
    int id = 0;
    for (int gy = 0; gy < 2; ++gy)
        for (int gx = 0; gx < 2; ++gx) {
            tg.graph.add_vertex(id);
            tg.position[id] = {base + step * gx, base + step * gy};
            ++id;
        }
    auto connect = [&](VertexId u, VertexId v) {
        EdgeId e = tg.graph.add_edge(u, v);
        tg.winding[e] = {0, 0};
        tg.geometry[e] = {tg.position[u], tg.position[v]};
        tg.edge_curve[e] = -1;
    };
    connect(0, 1);
    connect(2, 3);
    connect(0, 2);
    connect(1, 3);
    return tg;
}

}  // namespace

TEST_CASE("a (2,3) geodesic cycle is a chiral knot with a K5 obstruction") {
    ChiralityVerdict verdict = classify_embedding(knot_cycle(2, 3));
    CHECK(verdict.tag == VerdictTag::Chiral);
    REQUIRE(verdict.chiral_case.has_value());
    CHECK(*verdict.chiral_case == ChiralCase::Knot);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->cls == HomologyClass{2, 3});
    REQUIRE(verdict.obstruction.has_value());
    CHECK(std::holds_alternative<ObstructionK5>(*verdict.obstruction));
    std::string diag;
    bool ok = verify_obstruction(*verdict.obstruction, &diag);
    CAPTURE(diag);
    CHECK(ok);
}

TEST_CASE("two (1,2) cycles plus a bridge: chiral non-Hopf link via K3,3") {
    ChiralityVerdict verdict = classify_embedding(linked_cycles_with_bridge());
    CHECK(verdict.tag == VerdictTag::Chiral);
    REQUIRE(verdict.chiral_case.has_value());
    CHECK(*verdict.chiral_case == ChiralCase::NonHopfLink);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->cls == HomologyClass{1, 2});
    CHECK(verdict.witness->multiplicity == 2);
    REQUIRE(verdict.obstruction.has_value());
    CHECK(std::holds_alternative<ObstructionK33ViaLink>(*verdict.obstruction));
    CHECK(verify_obstruction(*verdict.obstruction));
}

TEST_CASE("H_3 classifies as the chiral Hopf-ladder case") {
    HopfLadder h3 = build_hopf_ladder(3);
    ChiralityVerdict verdict = classify_embedding(h3.realized);
    CHECK(verdict.tag == VerdictTag::Chiral);
    REQUIRE(verdict.chiral_case.has_value());
    CHECK(*verdict.chiral_case == ChiralCase::HopfLadderCase);
    REQUIRE(verdict.obstruction.has_value());
    const auto& obstruction = std::get<ObstructionK33ViaLadder>(*verdict.obstruction);
    REQUIRE(obstruction.witness.has_value());
    CHECK(check_h3_witness(h3.realized, *obstruction.witness));
    CHECK(verify_obstruction(*verdict.obstruction));
}

TEST_CASE("H_0..H_2 are catalogued achiral; H_3..H_5 chiral") {
    for (int n = 0; n <= 2; ++n) {
        ChiralityVerdict verdict = classify_embedding(build_hopf_ladder(n).realized);
        CAPTURE(n);
        CHECK(verdict.tag == VerdictTag::AchiralCatalogued);
    }
    for (int n = 3; n <= 5; ++n) {
        ChiralityVerdict verdict = classify_embedding(build_hopf_ladder(n).realized);
        CAPTURE(n);
        CHECK(verdict.tag == VerdictTag::Chiral);
        CHECK(*verdict.chiral_case == ChiralCase::HopfLadderCase);
    }
}

TEST_CASE("a grid in a disk patch is a trivial embedding") {
    ChiralityVerdict verdict = classify_embedding(disk_patch_grid());
    CHECK(verdict.tag == VerdictTag::TrivialEmbedding);
}

TEST_CASE("the mirror image gets the same verdict tag with mirrored witness") {
    TorusGraph knot = knot_cycle(2, 3);
    ChiralityVerdict verdict = classify_embedding(knot);
    ChiralityVerdict mirrored = classify_embedding(mirror_embedding(knot));
    CHECK(mirrored.tag == verdict.tag);
    CHECK(*mirrored.chiral_case == *verdict.chiral_case);
    REQUIRE(mirrored.witness.has_value());
    CHECK(mirrored.witness->cls ==
          normalize_unoriented(mirror(verdict.witness->cls)));

    HopfLadder h3 = build_hopf_ladder(3);
    ChiralityVerdict ladder = classify_embedding(mirror_embedding(h3.realized));
    CHECK(ladder.tag == VerdictTag::Chiral);
    CHECK(*ladder.chiral_case == ChiralCase::HopfLadderCase);
}

TEST_CASE("nonplanar abstract graphs are rejected") {
    // K5 drawn as the T(2,3) x T(1,-1) arrangement is nonplanar as an
    // abstract graph
    CurveSpec c1{{2, 3}, 1, Rat(0), false};
    CurveSpec c2{{1, -1}, 1, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({c1, c2});
    CHECK_THROWS_AS(classify_embedding(tg), InvalidInput);
}

TEST_CASE("find_hopf_ladder_subgraph: ladders, subdivided rungs, and H_0") {
    HopfLadder h3 = build_hopf_ladder(3);
    Census census = knot_link_census(h3.realized);
    auto witness = find_hopf_ladder_subgraph(h3.realized, census);
    REQUIRE(witness.has_value());
    CHECK(check_h3_witness(h3.realized, *witness));

    SUBCASE("subdivision invariance") {
        // subdivide one rung by hand: replace edge with a two-edge path
        TorusGraph tg = h3.realized;
        EdgeId rung = h3.rung_edges[0];
        const Edge e = tg.graph.edge(rung);
        const auto geom = tg.geometry.at(rung);
        PlanePoint mid{(geom.front().x + geom.back().x) / 2,
                       (geom.front().y + geom.back().y) / 2};
        MultiGraph g2;
        for (VertexId v : tg.graph.vertices()) g2.add_vertex(v);
        VertexId mid_vertex = 100;
        g2.add_vertex(mid_vertex);
        for (const Edge& other : tg.graph.edges())
            if (other.id != rung) g2.add_edge(other.id, other.u, other.v);
        EdgeId half1 = 200, half2 = 201;
        g2.add_edge(half1, e.u, mid_vertex);
        g2.add_edge(half2, mid_vertex, e.v);
        TorusGraph subdivided;
        subdivided.graph = g2;
        subdivided.position = tg.position;
        subdivided.position[mid_vertex] = mid;
        subdivided.winding = tg.winding;
        subdivided.winding.erase(rung);
        subdivided.winding[half1] = {0, 0};
        subdivided.winding[half2] = {0, 0};
        subdivided.geometry = tg.geometry;
        subdivided.geometry.erase(rung);
        subdivided.geometry[half1] = {geom.front(), mid};
        subdivided.geometry[half2] = {mid, geom.back()};
        subdivided.edge_curve = tg.edge_curve;
        subdivided.edge_curve.erase(rung);
        subdivided.edge_curve[half1] = -1;
        subdivided.edge_curve[half2] = -1;
        subdivided.curves = tg.curves;
        validate_embedding(subdivided);

        Census census2 = knot_link_census(subdivided);
        auto w2 = find_hopf_ladder_subgraph(subdivided, census2);
        REQUIRE(w2.has_value());
        CHECK(check_h3_witness(subdivided, *w2));
    }

    SUBCASE("H_0 has no connecting paths") {
        HopfLadder h0 = build_hopf_ladder(0);
        Census census0 = knot_link_census(h0.realized);
        CHECK_FALSE(find_hopf_ladder_subgraph(h0.realized, census0).has_value());
    }
}
