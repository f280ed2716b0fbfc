#include "toral/circulant.hpp"

#include <numeric>

#include "doctest.h"
#include "toral/errors.hpp"
#include "toral/isomorphism.hpp"
#include "toral/minor_oracle.hpp"

using namespace toral;

TEST_CASE("spec validation: gcd and positivity") {
    CHECK_THROWS_AS(CirculantSpec(2, 4), InvalidInput);
    CHECK_THROWS_AS(CirculantSpec(4, 2), InvalidInput);
    CHECK_THROWS_AS(CirculantSpec(0, 3), InvalidInput);
    CHECK(CirculantSpec(11, 3).normalized() == CirculantSpec(3, 11));
}

TEST_CASE("build_S: 4-regular, p+q vertices, 2(p+q) edges, chords form one cycle") {
    MultiGraph g = build_S(CirculantSpec(3, 11));
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 28);
    for (VertexId v : g.vertices()) CHECK(g.degree(v) == 4);

    // the chords alone form a single closed cycle
    MultiGraph chords;
    for (VertexId v : g.vertices()) chords.add_vertex(v);
    for (int j = 0; j < 14; ++j) {
        const Edge& e = g.edge(chord_edge_id(CirculantSpec(3, 11), j));
        chords.add_edge(e.id, e.u, e.v);
    }
    CHECK(is_connected(chords));
    for (VertexId v : chords.vertices()) CHECK(chords.degree(v) == 2);
}

TEST_CASE("S(2,3) = K5 and S(p,q) = S(q,p)") {
    CHECK(is_isomorphic(build_S(CirculantSpec(2, 3)), complete_graph(5)).has_value());
    for (auto [p, q] : {std::pair{3, 4}, {2, 5}, {3, 5}, {2, 7}, {4, 5}}) {
        auto iso = is_isomorphic(build_S(CirculantSpec(p, q)), build_S(CirculantSpec(q, p)),
                                 p + q);
        CHECK(iso.has_value());
    }
}

TEST_CASE("cayley_check") {
    CHECK(cayley_check(CirculantSpec(2, 3)));
    CHECK(cayley_check(CirculantSpec(3, 11)));
    CHECK(cayley_check(CirculantSpec(1, 2)));
}

TEST_CASE("minor_step (3,11): nine kept chords, result (2,7)") {
    ReductionStep step = minor_step(CirculantSpec(3, 11));
    const auto& ms = std::get<MinorStepData>(step);
    CHECK(ms.kept_chords.size() == 9);
    CHECK(ms.deleted_chords.size() == 5);
    CHECK(ms.to == CirculantSpec(2, 7));

    MultiGraph replayed = apply_ops(build_S(ms.from), minor_step_ops(ms));
    CHECK(replayed.vertex_count() == 9);
    CHECK(replayed.edge_count() == 18);
    CHECK(is_isomorphic(replayed, build_S(CirculantSpec(2, 7)), 14).has_value());
}

TEST_CASE("minor_step (4,5): five kept chords, result (2,3)") {
    ReductionStep step = minor_step(CirculantSpec(4, 5));
    const auto& ms = std::get<MinorStepData>(step);
    CHECK(ms.kept_chords.size() == 5);
    CHECK(ms.to == CirculantSpec(2, 3));
    MultiGraph replayed = apply_ops(build_S(ms.from), minor_step_ops(ms));
    CHECK(is_isomorphic(replayed, build_S(CirculantSpec(2, 3)), 9).has_value());
}

TEST_CASE("minor_step (2,7) skips: the formula gives back q") {
    ReductionStep step = minor_step(CirculantSpec(2, 7));
    CHECK(std::holds_alternative<SkipMinorData>(step));
    CHECK_THROWS_AS(minor_step(CirculantSpec(2, 7), false), InvalidInput);
}

TEST_CASE("invert_relabel: (2,7)->(4,5), (2,5)->(3,4), (2,3) terminal") {
    ReductionStep sa = invert_relabel(CirculantSpec(2, 7));
    const auto& a = std::get<InvertRelabelData>(sa);
    CHECK(a.p_prime == 5);
    CHECK(a.q_prime == 4);
    CHECK(a.to == CirculantSpec(4, 5));

    ReductionStep sb = invert_relabel(CirculantSpec(2, 5));
    const auto& b = std::get<InvertRelabelData>(sb);
    CHECK(b.p_prime == 4);
    CHECK(b.q_prime == 3);
    CHECK(b.to == CirculantSpec(3, 4));

    ReductionStep sc = invert_relabel(CirculantSpec(2, 3));
    const auto& c = std::get<InvertRelabelData>(sc);
    CHECK(c.q_prime == 2);
    CHECK(c.to == CirculantSpec(2, 3));
}

TEST_CASE("invert_relabel preserves p+q and the labeled graph matches") {
    for (int q : {3, 5, 7, 9, 11}) {
        ReductionStep step = invert_relabel(CirculantSpec(2, q));
        const auto& ir = std::get<InvertRelabelData>(step);
        CHECK(ir.from.order() == ir.to.order());
        std::multiset<std::pair<int, int>> relabeled, target;
        MultiGraph from_graph = build_S(ir.from), to_graph = build_S(ir.to);
        for (const Edge& e : from_graph.edges())
            relabeled.insert(std::minmax(ir.permutation[e.u], ir.permutation[e.v]));
        for (const Edge& e : to_graph.edges()) target.insert(std::minmax(e.u, e.v));
        CHECK(relabeled == target);
        // applying the op twice returns an isomorphic labeled graph
        auto iso = is_isomorphic(build_S(ir.from), build_S(ir.to), ir.from.order());
        CHECK(iso.has_value());
    }
}

TEST_CASE("reduce_to_K5 chains") {
    SUBCASE("(3,11) -> (2,7) -> (4,5) -> (2,3)") {
        ReductionCertificate cert = reduce_to_K5(CirculantSpec(3, 11));
        std::vector<CirculantSpec> chain = spec_chain(cert);
        REQUIRE(chain.size() == 4);
        CHECK(chain[0] == CirculantSpec(3, 11));
        CHECK(chain[1] == CirculantSpec(2, 7));
        CHECK(chain[2] == CirculantSpec(4, 5));
        CHECK(chain[3] == CirculantSpec(2, 3));
    }
    SUBCASE("(2,3) is already K5: empty chain") {
        ReductionCertificate cert = reduce_to_K5(CirculantSpec(2, 3));
        CHECK(cert.steps.empty());
        CHECK(verify_certificate(cert));
    }
    SUBCASE("(2,5) -> (3,4) -> (2,3)") {
        std::vector<CirculantSpec> chain = spec_chain(reduce_to_K5(CirculantSpec(2, 5)));
        REQUIRE(chain.size() == 3);
        CHECK(chain[1] == CirculantSpec(3, 4));
        CHECK(chain[2] == CirculantSpec(2, 3));
    }
}

TEST_CASE("verify_certificate accepts fresh certificates and rejects tampering") {
    ReductionCertificate cert = reduce_to_K5(CirculantSpec(3, 11));
    std::string diag;
    CHECK(verify_certificate(cert, &diag));

    SUBCASE("perturbed deleted chord") {
        for (ReductionStep& step : cert.steps) {
            if (auto* ms = std::get_if<MinorStepData>(&step)) {
                ms->deleted_chords[0] = ms->kept_chords[0];
                break;
            }
        }
        CHECK_FALSE(verify_certificate(cert, &diag));
    }
    SUBCASE("reordered steps") {
        REQUIRE(cert.steps.size() >= 2);
        std::swap(cert.steps[0], cert.steps[1]);
        CHECK_FALSE(verify_certificate(cert, &diag));
    }
    SUBCASE("wrong final isomorphism") {
        cert.final_isomorphism[0] = cert.final_isomorphism[1];
        CHECK_FALSE(verify_certificate(cert, &diag));
    }
}

TEST_CASE("kept chords interleave two others (exactly, in the late-wrap case); "
          "q_M odd; gcd preserved") {
    for (int p = 3; p <= 9; ++p) {
        for (int q = p + 1; p + q <= 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ReductionStep step = minor_step(CirculantSpec(p, q));
            const auto& ms = std::get<MinorStepData>(step);
            CHECK(ms.to.q % 2 == 1);
            CHECK(std::gcd(ms.to.p, ms.to.q) == 1);
            int m = ms.from.order();
            bool late_wrap = 2 * (m % p) > p;  // second round ends after the last chord
            for (int x : ms.kept_chords) {
                int crossings = 0;
                for (int y : ms.kept_chords)
                    if (chords_interleave(m, p, x, y)) ++crossings;
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(x);
                if (late_wrap)
                    CHECK(crossings == 2);
                else
                    CHECK((crossings == 2 || crossings == 3));
            }
        }
    }
}

TEST_CASE("sweep: all coprime 2 <= p < q with p+q <= 18 reduce and verify") {
    for (int p = 2; p < 9; ++p) {
        for (int q = p + 1; p + q <= 18; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            ReductionCertificate cert = reduce_to_K5(CirculantSpec(p, q));
            std::string diag;
            bool ok = verify_certificate(cert, &diag);
            CAPTURE(diag);
            CHECK(ok);
            // independent oracle confirmation
            OracleLimits limits;
            limits.host_cap = p + q;
            auto model = has_minor(build_S(CirculantSpec(p, q)), complete_graph(5), limits);
            REQUIRE(model.has_value());
            CHECK(verify_minor_model(build_S(CirculantSpec(p, q)), complete_graph(5), *model));
        }
    }
}
