#include "toral/census.hpp"

#include "doctest.h"
#include "toral/errors.hpp"
#include "toral/hopf.hpp"

using namespace toral;

namespace {

// small grid drawn inside a disk patch: every class is (0,0)
TorusGraph disk_patch_grid() {
    TorusGraph tg;
    // 2x2 grid of vertices in the middle of the square
    Rat base = make_rat(1, 4);
    Rat step = make_rat(1, 4);
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

TEST_CASE("single (2,3) curve: census contains the (2,3) knot class") {
    CurveSpec spec{{2, 3}, 1, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({spec});
    Census census = knot_link_census(tg);
    CHECK(census.classes.count({2, 3}) == 1);
    CHECK(census.families.empty());
}

TEST_CASE("two disjoint (1,1) curves: the ((1,1), k=2) Hopf pair") {
    HopfLadder h0 = build_hopf_ladder(0);
    Census census = knot_link_census(h0.realized);
    REQUIRE(census.families.size() == 1);
    CHECK(census.families[0].cls == HomologyClass{1, 1});
    CHECK(census.families[0].multiplicity == 2);
}

TEST_CASE("H_3 census: Hopf pair, no nontrivial knot class") {
    HopfLadder h3 = build_hopf_ladder(3);
    validate_embedding(h3.realized);
    Census census = knot_link_census(h3.realized);
    bool hopf = false;
    for (const LinkFamily& family : census.families) {
        CHECK(family.cls == HomologyClass{1, 1});
        if (family.multiplicity == 2) hopf = true;
        CHECK(family.multiplicity <= 2);
    }
    CHECK(hopf);
    for (const HomologyClass& cls : census.classes)
        CHECK_FALSE(classify_knot(cls) == KnotKind::ChiralTorusKnot);
}

TEST_CASE("disk patch grid: all classes (0,0)") {
    Census census = knot_link_census(disk_patch_grid());
    for (const HomologyClass& cls : census.classes) CHECK(is_null(cls));
    CHECK(census.families.empty());
}

TEST_CASE("cycle classes in a census are null or primitive") {
    for (auto specs : {std::vector<CurveSpec>{{{2, 3}, 1, Rat(0), false},
                                              {{1, -1}, 1, Rat(0), false}},
                       std::vector<CurveSpec>{{{1, 2}, 2, Rat(0), false}}}) {
        TorusGraph tg = arrangement_adjusted(specs);
        Census census = knot_link_census(tg);
        CHECK(!census.cycles.empty());
        for (const SimpleCycle& cycle : census.cycles)
            CHECK((is_null(cycle.cls) || is_primitive(cycle.cls)));
    }
}

TEST_CASE("the census edge cap guards enumeration") {
    CurveSpec c1{{2, 3}, 1, Rat(0), false};
    CurveSpec c2{{1, -1}, 1, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({c1, c2});
    CensusLimits limits;
    limits.max_graph_edges = 5;
    CHECK_THROWS_AS(knot_link_census(tg, limits), CapExceeded);
}
