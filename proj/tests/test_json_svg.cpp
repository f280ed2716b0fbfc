#include <nlohmann/json.hpp>

#include "doctest.h"
#include "toral/classify.hpp"
#include "toral/errors.hpp"
#include "toral/json_io.hpp"
#include "toral/svg_render.hpp"

using namespace toral;

TEST_CASE("graph documents round-trip on canonical form") {
    CurveSpec c1{{2, 3}, 1, Rat(0), false};
    CurveSpec c2{{1, -1}, 1, Rat(0), true};
    TorusGraph tg = arrangement_adjusted({c1, c2});
    Json doc = graph_to_json(tg);
    LoadedGraph loaded = graph_from_json(doc);
    REQUIRE(loaded.embedded.has_value());
    validate_embedding(*loaded.embedded);
    CHECK(graph_to_json(*loaded.embedded) == doc);  // parse . emit = identity
    CHECK(loaded.embedded->corner_vertex == tg.corner_vertex);
    CHECK(loaded.embedded->curves.size() == tg.curves.size());
}

TEST_CASE("rationals are serialized as num/den strings in lowest terms") {
    CurveSpec spec{{1, 1}, 2, make_rat(2, 8), false};
    TorusGraph tg = arrangement_adjusted({spec});
    Json doc = graph_to_json(tg);
    CHECK(doc["curves"][0]["offset"] == "1/4");
    CHECK(doc["curves"][1]["offset"] == "3/4");
    // integer shorthand accepted on input
    Json patched = doc;
    patched["vertices"][0]["x"] = 0;
    CHECK_NOTHROW(graph_from_json(patched));
}

TEST_CASE("schema version gate") {
    MultiGraph g = complete_graph(3);
    Json doc = graph_to_json(g);
    doc["schema_version"] = 2;
    CHECK_THROWS_AS(graph_from_json(doc), InvalidInput);
    doc.erase("schema_version");
    CHECK_THROWS_AS(graph_from_json(doc), InvalidInput);
}

TEST_CASE("abstract graph documents load without geometry") {
    Json doc = graph_to_json(build_S(CirculantSpec(2, 3)));
    LoadedGraph loaded = graph_from_json(doc);
    CHECK_FALSE(loaded.embedded.has_value());
    CHECK(loaded.graph.vertex_count() == 5);
    CHECK(loaded.graph.edge_count() == 10);
}

TEST_CASE("reduction certificates round-trip and stay verifiable") {
    ReductionCertificate cert = reduce_to_K5(CirculantSpec(3, 11));
    Json doc = certificate_to_json(cert);
    ReductionCertificate loaded = certificate_from_json(doc);
    CHECK(verify_certificate(loaded));
    CHECK(certificate_to_json(loaded) == doc);
}

TEST_CASE("verdict documents round-trip with verifiable obstructions") {
    CurveSpec spec{{2, 3}, 1, Rat(0), false};
    ChiralityVerdict verdict = classify_embedding(arrangement_adjusted({spec}));
    Json doc = verdict_to_json(verdict);
    ChiralityVerdict loaded = verdict_from_json(doc);
    CHECK(loaded.tag == VerdictTag::Chiral);
    REQUIRE(loaded.obstruction.has_value());
    std::string diag;
    bool ok = verify_obstruction(*loaded.obstruction, &diag);
    CAPTURE(diag);
    CHECK(ok);
    CHECK(verdict_to_json(loaded) == doc);
}

TEST_CASE("ladder obstructions round-trip") {
    HopfLadder h3 = build_hopf_ladder(3);
    ChiralityVerdict verdict = classify_embedding(h3.realized);
    Json doc = verdict_to_json(verdict);
    ChiralityVerdict loaded = verdict_from_json(doc);
    REQUIRE(loaded.obstruction.has_value());
    CHECK(verify_obstruction(*loaded.obstruction));
}

TEST_CASE("minor model documents round-trip") {
    MultiGraph host = build_S(CirculantSpec(3, 11));
    auto model = has_minor(host, complete_graph(5));
    REQUIRE(model.has_value());
    MinorModel loaded = minor_model_from_json(minor_model_to_json(*model));
    CHECK(verify_minor_model(host, complete_graph(5), loaded));
}

TEST_CASE("SVG output is deterministic and well-formed") {
    CurveSpec c1{{2, 3}, 1, Rat(0), false};
    CurveSpec c2{{1, -1}, 1, Rat(0), false};
    TorusGraph tg = arrangement_adjusted({c1, c2});
    std::string svg1 = render_svg(tg);
    std::string svg2 = render_svg(tg);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("</svg>") != std::string::npos);
    CHECK(svg1.find("<circle") != std::string::npos);  // vertices
    CHECK(svg1.find("#1f77b4") != std::string::npos);  // curve 0 color
    CHECK(svg1.find("#d62728") != std::string::npos);  // curve 1 color

    RenderOptions cover;
    cover.universal_cover = true;
    std::string unwrapped = render_svg(tg, cover);
    CHECK(unwrapped != svg1);
    CHECK(unwrapped.find("</svg>") != std::string::npos);
}

TEST_CASE("the empty graph renders as a bare square frame") {
    TorusGraph empty;
    std::string svg = render_svg(empty);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("H_3 renders with rungs in the default color") {
    HopfLadder h3 = build_hopf_ladder(3);
    std::string svg = render_svg(h3.realized);
    CHECK(svg.find("#222222") != std::string::npos);  // untagged rungs
}
