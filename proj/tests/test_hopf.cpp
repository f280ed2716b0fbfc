#include "toral/hopf.hpp"

#include "doctest.h"
#include "toral/census.hpp"
#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"

using namespace toral;

TEST_CASE("H_3: 6 vertices, 9 edges, valid embedding") {
    HopfLadder h3 = build_hopf_ladder(3);
    CHECK(h3.realized.graph.vertex_count() == 6);
    CHECK(h3.realized.graph.edge_count() == 9);
    CHECK(is_simple(h3.realized.graph));
    validate_embedding(h3.realized);
    // sides carry class (1,1), rungs winding (0,0)
    CHECK(cycle_class(h3.realized, h3.side_a_edges) == HomologyClass{1, 1});
    CHECK(cycle_class(h3.realized, h3.side_b_edges) == HomologyClass{1, 1});
    for (EdgeId e : h3.rung_edges) CHECK(is_null(h3.realized.winding.at(e)));
}

TEST_CASE("H_0: two disjoint (1,1) curves") {
    HopfLadder h0 = build_hopf_ladder(0);
    CHECK(h0.realized.graph.vertex_count() == 2);
    CHECK(h0.realized.graph.edge_count() == 2);
    for (const Edge& e : h0.realized.graph.edges()) CHECK(e.is_loop());
    validate_embedding(h0.realized);
}

TEST_CASE("ladder size law: 2n vertices, 3n edges for n >= 1") {
    for (int n = 1; n <= 6; ++n) {
        HopfLadder ladder = build_hopf_ladder(n);
        CHECK(ladder.realized.graph.vertex_count() == 2 * static_cast<std::size_t>(n));
        CHECK(ladder.realized.graph.edge_count() == 3 * static_cast<std::size_t>(n));
        validate_embedding(ladder.realized);
    }
}

TEST_CASE("H_2 abstract graph is neither simple nor 3-connected") {
    HopfLadder h2 = build_hopf_ladder(2);
    CHECK_FALSE(is_simple(h2.realized.graph));
    CHECK(connectivity(h2.realized.graph) == 2);
}

TEST_CASE("classify_hopf_ladder: achiral up to 2 rungs, chiral from 3") {
    for (int n = 0; n <= 2; ++n) CHECK(classify_hopf_ladder(n) == LadderChirality::Achiral);
    for (int n = 3; n <= 8; ++n) CHECK(classify_hopf_ladder(n) == LadderChirality::Chiral);
    CHECK_THROWS_AS(classify_hopf_ladder(-1), InvalidInput);
}

TEST_CASE("orientation_from_rungs: absent for n <= 2, defined from 3 on") {
    CHECK_FALSE(orientation_from_rungs(build_hopf_ladder(0)).has_value());
    CHECK_FALSE(orientation_from_rungs(build_hopf_ladder(1)).has_value());
    CHECK_FALSE(orientation_from_rungs(build_hopf_ladder(2)).has_value());
    for (int n = 3; n <= 6; ++n) {
        auto orientations = orientation_from_rungs(build_hopf_ladder(n));
        REQUIRE(orientations.has_value());
        CHECK(orientations->linking == 1);
    }
}

TEST_CASE("mirrored realization flips the linking sign") {
    HopfLadder h3 = build_hopf_ladder(3);
    HopfLadder mirrored = mirror_ladder(h3);
    validate_embedding(mirrored.realized);
    auto orientations = orientation_from_rungs(mirrored);
    REQUIRE(orientations.has_value());
    CHECK(orientations->linking == -1);
}

TEST_CASE("orientation is invariant under cyclic rung relabeling") {
    HopfLadder h4 = build_hopf_ladder(4);
    auto base = orientation_from_rungs(h4);
    REQUIRE(base.has_value());
    for (int shift = 1; shift < 4; ++shift) {
        auto rotated = orientation_from_rungs(rotate_rung_labels(h4, shift));
        REQUIRE(rotated.has_value());
        CHECK(rotated->linking == base->linking);
    }
}

TEST_CASE("H_n abstract graphs match the census Hopf structure") {
    HopfLadder h5 = build_hopf_ladder(5);
    Census census = knot_link_census(h5.realized);
    bool hopf = false;
    for (const LinkFamily& family : census.families)
        if (family.cls == HomologyClass{1, 1} && family.multiplicity == 2) hopf = true;
    CHECK(hopf);
}
