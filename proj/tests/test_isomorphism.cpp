#include "toral/isomorphism.hpp"

#include "doctest.h"
#include "toral/circulant.hpp"
#include "toral/errors.hpp"

using namespace toral;

TEST_CASE("S(2,3) is isomorphic to K5") {
    auto iso = is_isomorphic(build_S(CirculantSpec(2, 3)), complete_graph(5));
    REQUIRE(iso.has_value());
    CHECK(check_isomorphism(build_S(CirculantSpec(2, 3)), complete_graph(5), *iso));
}

TEST_CASE("K5 and K3,3 are not isomorphic") {
    CHECK_FALSE(is_isomorphic(complete_graph(5), complete_bipartite(3, 3)).has_value());
}

TEST_CASE("S(3,4) is isomorphic to S(4,3)") {
    auto iso = is_isomorphic(build_S(CirculantSpec(3, 4)), build_S(CirculantSpec(4, 3)));
    CHECK(iso.has_value());
}

TEST_CASE("multiplicities are preserved") {
    MultiGraph doubled;
    doubled.add_vertex(0);
    doubled.add_vertex(1);
    doubled.add_edge(0, 0, 1);
    doubled.add_edge(1, 0, 1);

    MultiGraph loop_pair;
    loop_pair.add_vertex(0);
    loop_pair.add_vertex(1);
    loop_pair.add_edge(0, 0, 0);
    loop_pair.add_edge(1, 0, 1);

    CHECK_FALSE(is_isomorphic(doubled, loop_pair).has_value());
    CHECK(is_isomorphic(doubled, doubled).has_value());
}

TEST_CASE("size cap raises, larger caps allow bigger instances") {
    MultiGraph g = build_S(CirculantSpec(3, 14));  // 17 vertices
    CHECK_THROWS_AS(is_isomorphic(g, g), CapExceeded);
    CHECK(is_isomorphic(g, g, 17).has_value());
}

TEST_CASE("check_isomorphism rejects wrong maps") {
    MultiGraph k3 = complete_graph(3);
    std::map<VertexId, VertexId> wrong{{0, 0}, {1, 1}, {2, 1}};
    CHECK_FALSE(check_isomorphism(k3, k3, wrong));
    std::map<VertexId, VertexId> ident{{0, 0}, {1, 1}, {2, 2}};
    CHECK(check_isomorphism(k3, k3, ident));
}
