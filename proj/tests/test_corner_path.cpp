#include "toral/corner_path.hpp"

#include "doctest.h"
#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"

using namespace toral;

namespace {

TorusGraph lemma_arrangement(int p, int q, int r, int s) {
    CurveSpec knot{{p, q}, 1, Rat(0), false};
    CurveSpec anchored{{r, -s}, 1, Rat(0), true};
    return arrangement_adjusted({knot, anchored});
}

}  // namespace

TEST_CASE("(2,3,1,1): the path is the anchored diagonal itself") {
    TorusGraph tg = lemma_arrangement(2, 3, 1, 1);
    auto path = find_corner_path(tg);
    REQUIRE(path.has_value());
    CHECK(check_corner_path(tg, *path));
    // every edge of the path lies on the anchored curve
    int anchored = tg.curves[0].corner_anchored ? 0 : 1;
    for (EdgeId e : path->edges) CHECK(tg.edge_curve.at(e) == anchored);
    // and the path exhausts the diagonal: 5 crossings + corner = 6 edges
    CHECK(path->edges.size() == 6);

    SReduction red = reduce_arrangement_to_S(tg, *path);
    CHECK(red.spec == CirculantSpec(2, 3));
    CHECK(is_isomorphic(red.reduced, complete_graph(5)).has_value());
}

TEST_CASE("corner paths for the lemma tuples reduce to S(p,q)") {
    struct Tuple {
        int p, q, r, s;
    };
    for (Tuple t : {Tuple{2, 3, 2, 5}, Tuple{3, 4, 2, 3}, Tuple{3, 5, 1, 2},
                    Tuple{3, 4, 1, 1}}) {
        CAPTURE(t.p);
        CAPTURE(t.q);
        CAPTURE(t.r);
        CAPTURE(t.s);
        TorusGraph tg = lemma_arrangement(t.p, t.q, t.r, t.s);
        auto path = find_corner_path(tg);
        REQUIRE(path.has_value());
        CHECK(check_corner_path(tg, *path));

        SReduction red = reduce_arrangement_to_S(tg, *path);
        CHECK(red.spec == CirculantSpec(t.p, t.q).normalized());
        MultiGraph expected = build_S(red.spec);
        CHECK(red.reduced.vertex_count() == expected.vertex_count());
        CHECK(red.reduced.edge_count() == expected.edge_count());
        CHECK(check_isomorphism(red.reduced, expected, red.iso));
        // replay the recorded ops independently
        MultiGraph replayed = apply_ops(tg.graph, red.ops);
        CHECK(check_isomorphism(replayed, expected, red.iso));
    }
}

TEST_CASE("(3,4,1,1) reduces to S(3,4): 7 vertices, 14 edges") {
    TorusGraph tg = lemma_arrangement(3, 4, 1, 1);
    auto path = find_corner_path(tg);
    REQUIRE(path.has_value());
    SReduction red = reduce_arrangement_to_S(tg, *path);
    CHECK(red.spec == CirculantSpec(3, 4));
    CHECK(red.reduced.vertex_count() == 7);
    CHECK(red.reduced.edge_count() == 14);
}

TEST_CASE("paths respect orientations and stay off the boundary") {
    TorusGraph tg = lemma_arrangement(2, 3, 2, 5);
    int found = 0;
    for_each_corner_path(tg, [&](const CornerPath& path) {
        CHECK(check_corner_path(tg, path));
        return ++found >= 5;
    });
    CHECK(found >= 1);
}

TEST_CASE("non-anchored arrangements are rejected") {
    CurveSpec c1{{2, 3}, 1, Rat(0), false};
    CurveSpec c2{{1, -1}, 1, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({c1, c2});
    CHECK_THROWS_AS(find_corner_path(tg), InvalidInput);
}
