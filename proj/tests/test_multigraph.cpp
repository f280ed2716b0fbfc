#include "toral/multigraph.hpp"

#include "doctest.h"
#include "toral/errors.hpp"

using namespace toral;

namespace {

MultiGraph triangle() {
    MultiGraph g;
    for (int i = 0; i < 3; ++i) g.add_vertex(i);
    g.add_edge(0, 0, 1);
    g.add_edge(1, 1, 2);
    g.add_edge(2, 2, 0);
    return g;
}

}  // namespace

TEST_CASE("delete_edge: triangle minus one edge is a path on 3 vertices") {
    MultiGraph p = delete_edge(triangle(), 1);
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(is_connected(p));
    CHECK(p.degree(1) == 1);
    CHECK(p.degree(2) == 1);
    CHECK(p.degree(0) == 2);
}

TEST_CASE("delete_edge: K5 minus any edge keeps 5 vertices and 9 edges") {
    MultiGraph k5 = complete_graph(5);
    for (const Edge& e : k5.edges()) {
        MultiGraph g = delete_edge(k5, e.id);
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 9);
    }
    CHECK_THROWS_AS(delete_edge(k5, 999), InvalidInput);
}

TEST_CASE("contract_edge: path on 3 vertices becomes a single edge") {
    MultiGraph p = delete_edge(triangle(), 1);
    MultiGraph c = contract_edge(p, 0);
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 1);
    CHECK_FALSE(c.edge(2).is_loop());
}

TEST_CASE("contract_edge: triangle contracts to a double edge, no simplification") {
    MultiGraph c = contract_edge(triangle(), 0);
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 2);
    CHECK_FALSE(is_simple(c));
    CHECK(c.edges_between(0, 2).size() == 2);
}

TEST_CASE("contract_edge: loops are rejected and parallels kept as loops") {
    MultiGraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.add_edge(0, 0, 1);
    g.add_edge(1, 0, 1);
    MultiGraph c = contract_edge(g, 0);
    CHECK(c.vertex_count() == 1);
    CHECK(c.edge_count() == 1);
    CHECK(c.edge(1).is_loop());
    CHECK_THROWS_AS(contract_edge(c, 1), InvalidInput);
}

TEST_CASE("delete_isolated_vertices") {
    MultiGraph g = complete_graph(5);
    g.add_vertex(99);
    MultiGraph h = delete_isolated_vertices(g);
    CHECK(h.vertex_count() == 5);
    CHECK_FALSE(h.has_vertex(99));

    MultiGraph empty;
    CHECK(delete_isolated_vertices(empty).vertex_count() == 0);
}

TEST_CASE("is_simple") {
    CHECK(is_simple(complete_graph(5)));
    MultiGraph d;
    d.add_vertex(0);
    d.add_vertex(1);
    d.add_edge(0, 0, 1);
    d.add_edge(1, 0, 1);
    CHECK_FALSE(is_simple(d));
    MultiGraph l;
    l.add_vertex(0);
    l.add_edge(0, 0, 0);
    CHECK_FALSE(is_simple(l));
}

TEST_CASE("connectivity: K4 = 3, C5 = 2, K_n = n-1") {
    CHECK(connectivity(complete_graph(4)) == 3);
    MultiGraph c5;
    for (int i = 0; i < 5; ++i) c5.add_vertex(i);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(connectivity(c5) == 2);
    for (int n = 2; n <= 6; ++n) CHECK(connectivity(complete_graph(n)) == n - 1);
}

TEST_CASE("connectivity: disconnected graphs give 0") {
    MultiGraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    CHECK(connectivity(g) == 0);
}

TEST_CASE("invariants: endpoint validity and id uniqueness are enforced") {
    MultiGraph g;
    g.add_vertex(0);
    CHECK_THROWS_AS(g.add_edge(5, 0, 1, ""), InvalidInput);
    CHECK_THROWS_AS(g.add_vertex(0), InvalidInput);
    g.add_edge(0, 0, 0);
    CHECK_THROWS_AS(g.add_edge(0, 0, 0, ""), InvalidInput);
}

TEST_CASE("apply_ops replays deletions and contractions in order") {
    std::vector<ReplayOp> ops{DeleteOp{1}, ContractOp{0}};
    MultiGraph r = apply_ops(triangle(), ops);
    CHECK(r.vertex_count() == 2);
    CHECK(r.edge_count() == 1);
}
