#include "toral/minor_oracle.hpp"

#include <random>

#include "doctest.h"
#include "toral/circulant.hpp"
#include "toral/errors.hpp"

using namespace toral;

namespace {

OracleLimits wide(int cap) {
    OracleLimits l;
    l.host_cap = cap;
    return l;
}

MultiGraph random_simple_graph(std::mt19937_64& rng, int n, double p) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("too few branch sets: K5 is not a minor of K4, K3,3 not of K5") {
    CHECK_FALSE(has_minor(complete_graph(4), complete_graph(5)).has_value());
    CHECK_FALSE(has_minor(complete_graph(5), complete_bipartite(3, 3)).has_value());
}

TEST_CASE("K5 is a minor of S(3,11), and the model verifies") {
    MultiGraph host = build_S(CirculantSpec(3, 11));
    auto model = has_minor(host, complete_graph(5));
    REQUIRE(model.has_value());
    CHECK(verify_minor_model(host, complete_graph(5), *model));
}

TEST_CASE("verify_minor_model rejects malformed witnesses") {
    MultiGraph host = complete_graph(5);
    MultiGraph pattern = complete_graph(3);
    MinorModel model;
    model.branch_sets[0] = {0};
    model.branch_sets[1] = {1};
    model.branch_sets[2] = {2};
    model.edge_assignment[0] = 0;   // edge (0,1) of K3 -> edge (0,1) of K5
    model.edge_assignment[1] = 1;   // (0,2) -> (0,2)
    model.edge_assignment[2] = 4;   // (1,2) -> (1,2)
    REQUIRE(verify_minor_model(host, pattern, model));

    SUBCASE("overlapping branch sets") {
        model.branch_sets[1] = {0};
        CHECK_FALSE(verify_minor_model(host, pattern, model));
    }
    SUBCASE("disconnected branch set") {
        MultiGraph path;
        for (int i = 0; i < 3; ++i) path.add_vertex(i);
        path.add_edge(0, 0, 1);
        path.add_edge(1, 1, 2);
        MinorModel m2;
        m2.branch_sets[0] = {0, 2};  // not connected in the path without 1
        m2.branch_sets[1] = {1};
        m2.branch_sets[2] = {};
        CHECK_FALSE(verify_minor_model(path, pattern, m2));
    }
    SUBCASE("duplicate edge assignment") {
        model.edge_assignment[1] = 0;
        CHECK_FALSE(verify_minor_model(host, pattern, model));
    }
    SUBCASE("edge not joining its branch sets") {
        model.edge_assignment[0] = 7;
        CHECK_FALSE(verify_minor_model(host, pattern, model));
    }
}

TEST_CASE("is_planar: K4 planar, K3,3 and K5 not, K5 minus an edge planar") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    MultiGraph k5e = delete_edge(complete_graph(5), 0);
    CHECK(is_planar(k5e));
    MultiGraph s23 = build_S(CirculantSpec(2, 3));
    CHECK(is_planar(delete_edge(s23, chord_edge_id(CirculantSpec(2, 3), 0))));
}

TEST_CASE("host cap is enforced and configurable") {
    MultiGraph host = build_S(CirculantSpec(3, 20));  // 23 vertices
    CHECK_THROWS_AS(has_minor(host, complete_graph(5), wide(18)), CapExceeded);
    auto model = has_minor(host, complete_graph(5), wide(30));
    REQUIRE(model.has_value());
    CHECK(verify_minor_model(host, complete_graph(5), *model));
}

TEST_CASE("oracle agrees with the Euler prefilter on random simple graphs") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        MultiGraph g = random_simple_graph(rng, n, 0.35);
        if (!is_connected(g)) continue;
        if (g.edge_count() > 3 * g.vertex_count() - 6) CHECK_FALSE(is_planar(g));
    }
}

TEST_CASE("random minors obtained by ops are confirmed by the oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        MultiGraph g = random_simple_graph(rng, 8, 0.5);
        MultiGraph h = g;
        // random sequence of deletions/contractions down to <= 5 vertices
        while (h.vertex_count() > 5 && h.edge_count() > 0) {
            const auto& edges = h.edges();
            const Edge e = edges[rng() % edges.size()];
            if (!e.is_loop() && (rng() & 1))
                h = contract_edge(h, e.id);
            else
                h = delete_edge(h, e.id);
        }
        h = delete_isolated_vertices(h);
        if (h.vertex_count() == 0 || h.vertex_count() > 5) continue;
        CAPTURE(trial);
        auto model = has_minor(g, h);
        REQUIRE(model.has_value());
        CHECK(verify_minor_model(g, h, *model));
        // contraction + cleanup never increases the vertex count
        CHECK(h.vertex_count() <= g.vertex_count());
    }
}
