#include "toral/json_io.hpp"

#include <nlohmann/json.hpp>

#include "toral/errors.hpp"

namespace toral {

namespace {

void check_schema(const Json& doc, const char* expected_type) {
    if (!doc.is_object()) throw InvalidInput("document is not a JSON object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw InvalidInput("missing schema_version");
    if (doc["schema_version"].get<int>() != kSchemaVersion)
        throw InvalidInput("unsupported schema_version " + doc["schema_version"].dump() +
                           " (this tool speaks " + std::to_string(kSchemaVersion) + ")");
    if (!doc.contains("type") || doc["type"] != expected_type)
        throw InvalidInput(std::string("expected document type \"") + expected_type + "\"");
}

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw InvalidInput("expected a rational (\"num/den\" string or integer)");
}

Json class_json(const HomologyClass& c) { return Json::array({c.a, c.b}); }

HomologyClass class_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("expected an [a,b] pair");
    return {j[0].get<long>(), j[1].get<long>()};
}

Json spec_json(const CirculantSpec& s) { return Json::array({s.p, s.q}); }

CirculantSpec spec_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("expected a [p,q] pair");
    return CirculantSpec(j[0].get<int>(), j[1].get<int>());
}

Json curve_spec_json(const CurveSpec& spec) {
    Json out;
    out["class"] = class_json(spec.cls);
    out["copies"] = spec.copies;
    out["offset"] = rat_json(spec.offset);
    if (spec.corner_anchored) out["corner_anchored"] = true;
    return out;
}

CurveSpec curve_spec_from(const Json& j) {
    CurveSpec spec;
    spec.cls = class_from(j.at("class"));
    spec.copies = j.value("copies", 1);
    if (j.contains("offset")) spec.offset = rat_from(j["offset"]);
    spec.corner_anchored = j.value("corner_anchored", false);
    return spec;
}

Json ops_json(const std::vector<ReplayOp>& ops) {
    Json out = Json::array();
    for (const ReplayOp& op : ops) {
        if (const auto* del = std::get_if<DeleteOp>(&op))
            out.push_back({{"op", "delete"}, {"edge", del->edge}});
        else
            out.push_back({{"op", "contract"}, {"edge", std::get<ContractOp>(op).edge}});
    }
    return out;
}

std::vector<ReplayOp> ops_from(const Json& j) {
    std::vector<ReplayOp> ops;
    for (const Json& item : j) {
        std::string kind = item.at("op").get<std::string>();
        EdgeId edge = item.at("edge").get<EdgeId>();
        if (kind == "delete")
            ops.push_back(DeleteOp{edge});
        else if (kind == "contract")
            ops.push_back(ContractOp{edge});
        else
            throw InvalidInput("unknown op kind: " + kind);
    }
    return ops;
}

Json vertex_map_json(const std::map<VertexId, VertexId>& map) {
    Json out = Json::array();
    for (const auto& [a, b] : map) out.push_back(Json::array({a, b}));
    return out;
}

std::map<VertexId, VertexId> vertex_map_from(const Json& j) {
    std::map<VertexId, VertexId> out;
    for (const Json& item : j) out[item.at(0).get<VertexId>()] = item.at(1).get<VertexId>();
    return out;
}

Json graph_body(const MultiGraph& g, const TorusGraph* tg) {
    Json vertices = Json::array();
    for (VertexId v : g.vertices()) {
        Json jv;
        jv["id"] = v;
        if (tg) {
            const PlanePoint& p = tg->position.at(v);
            jv["x"] = rat_json(p.x);
            jv["y"] = rat_json(p.y);
        }
        if (!g.vertex_label(v).empty()) jv["label"] = g.vertex_label(v);
        vertices.push_back(jv);
    }
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        Json je;
        je["id"] = e.id;
        je["u"] = e.u;
        je["v"] = e.v;
        if (tg) {
            const HomologyClass& w = tg->winding.at(e.id);
            je["winding"] = Json::array({w.a, w.b});
            Json poly = Json::array();
            for (const PlanePoint& p : tg->geometry.at(e.id))
                poly.push_back(Json::array({rat_json(p.x), rat_json(p.y)}));
            je["polyline"] = poly;
            auto it = tg->edge_curve.find(e.id);
            if (it != tg->edge_curve.end() && it->second >= 0) je["curve"] = it->second;
        }
        if (!g.edge_label(e.id).empty()) je["label"] = g.edge_label(e.id);
        edges.push_back(je);
    }
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["type"] = "torus_graph";
    out["vertices"] = vertices;
    out["edges"] = edges;
    if (tg) {
        Json curves = Json::array();
        for (const CurveRef& ref : tg->curves) {
            Json jc;
            jc["spec"] = ref.spec_index;
            jc["copy"] = ref.copy_index;
            jc["class"] = class_json(ref.cls);
            jc["offset"] = rat_json(ref.offset);
            if (ref.corner_anchored) jc["corner_anchored"] = true;
            curves.push_back(jc);
        }
        out["curves"] = curves;
        if (tg->corner_vertex) out["corner_vertex"] = *tg->corner_vertex;
    }
    return out;
}

}  // namespace

Json graph_to_json(const TorusGraph& tg) { return graph_body(tg.graph, &tg); }

Json graph_to_json(const MultiGraph& g) { return graph_body(g, nullptr); }

LoadedGraph graph_from_json(const Json& doc) {
    check_schema(doc, "torus_graph");
    LoadedGraph out;
    bool has_geometry = false;
    for (const Json& jv : doc.at("vertices")) {
        VertexId id = jv.at("id").get<VertexId>();
        out.graph.add_vertex(id, jv.value("label", std::string()));
        if (jv.contains("x")) has_geometry = true;
    }
    for (const Json& je : doc.at("edges"))
        out.graph.add_edge(je.at("id").get<EdgeId>(), je.at("u").get<VertexId>(),
                           je.at("v").get<VertexId>(), je.value("label", std::string()));
    if (!has_geometry) return out;

    TorusGraph tg;
    tg.graph = out.graph;
    for (const Json& jv : doc.at("vertices")) {
        VertexId id = jv.at("id").get<VertexId>();
        if (!jv.contains("x") || !jv.contains("y"))
            throw InvalidInput("embedded document with a position-less vertex");
        tg.position[id] = {rat_from(jv["x"]), rat_from(jv["y"])};
    }
    for (const Json& je : doc.at("edges")) {
        EdgeId id = je.at("id").get<EdgeId>();
        if (!je.contains("winding") || !je.contains("polyline"))
            throw InvalidInput("embedded document with a geometry-less edge");
        tg.winding[id] = class_from(je["winding"]);
        std::vector<PlanePoint> poly;
        for (const Json& jp : je["polyline"])
            poly.push_back({rat_from(jp.at(0)), rat_from(jp.at(1))});
        tg.geometry[id] = poly;
        tg.edge_curve[id] = je.value("curve", -1);
    }
    if (doc.contains("curves")) {
        for (const Json& jc : doc["curves"]) {
            CurveRef ref;
            ref.spec_index = jc.value("spec", -1);
            ref.copy_index = jc.value("copy", 0);
            ref.cls = class_from(jc.at("class"));
            ref.offset = rat_from(jc.at("offset"));
            ref.corner_anchored = jc.value("corner_anchored", false);
            tg.curves.push_back(ref);
        }
    }
    if (doc.contains("corner_vertex")) tg.corner_vertex = doc["corner_vertex"].get<VertexId>();
    out.embedded = std::move(tg);
    return out;
}

Json certificate_to_json(const ReductionCertificate& cert) {
    Json steps = Json::array();
    for (const ReductionStep& step : cert.steps) {
        Json js;
        if (const auto* ms = std::get_if<MinorStepData>(&step)) {
            js["kind"] = "minor";
            js["from"] = spec_json(ms->from);
            js["to"] = spec_json(ms->to);
            js["kept_chords"] = ms->kept_chords;
            js["deleted_chords"] = ms->deleted_chords;
            js["contracted_cycle_edges"] = ms->contracted_cycle_edges;
        } else if (const auto* ir = std::get_if<InvertRelabelData>(&step)) {
            js["kind"] = "invert_relabel";
            js["from"] = spec_json(ir->from);
            js["to"] = spec_json(ir->to);
            js["p_prime"] = ir->p_prime;
            js["q_prime"] = ir->q_prime;
            js["permutation"] = ir->permutation;
        } else {
            const auto& sk = std::get<SkipMinorData>(step);
            js["kind"] = "skip_minor";
            js["spec"] = spec_json(sk.spec);
            js["reason"] = sk.reason;
        }
        steps.push_back(js);
    }
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["type"] = "reduction_certificate";
    out["initial"] = spec_json(cert.initial);
    out["steps"] = steps;
    out["final_isomorphism"] = cert.final_isomorphism;
    return out;
}

ReductionCertificate certificate_from_json(const Json& doc) {
    check_schema(doc, "reduction_certificate");
    ReductionCertificate cert;
    cert.initial = spec_from(doc.at("initial"));
    for (const Json& js : doc.at("steps")) {
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "minor") {
            MinorStepData ms;
            ms.from = spec_from(js.at("from"));
            ms.to = spec_from(js.at("to"));
            ms.kept_chords = js.at("kept_chords").get<std::vector<int>>();
            ms.deleted_chords = js.at("deleted_chords").get<std::vector<int>>();
            ms.contracted_cycle_edges = js.at("contracted_cycle_edges").get<std::vector<int>>();
            cert.steps.push_back(std::move(ms));
        } else if (kind == "invert_relabel") {
            InvertRelabelData ir;
            ir.from = spec_from(js.at("from"));
            ir.to = spec_from(js.at("to"));
            ir.p_prime = js.at("p_prime").get<int>();
            ir.q_prime = js.at("q_prime").get<int>();
            ir.permutation = js.at("permutation").get<std::vector<int>>();
            cert.steps.push_back(std::move(ir));
        } else if (kind == "skip_minor") {
            cert.steps.push_back(
                SkipMinorData{spec_from(js.at("spec")), js.value("reason", std::string())});
        } else {
            throw InvalidInput("unknown reduction step kind: " + kind);
        }
    }
    cert.final_isomorphism = doc.at("final_isomorphism").get<std::vector<int>>();
    return cert;
}

Json minor_model_to_json(const MinorModel& model) {
    Json branch = Json::object();
    for (const auto& [pv, set] : model.branch_sets) branch[std::to_string(pv)] = set;
    Json edges = Json::object();
    for (const auto& [pe, he] : model.edge_assignment) edges[std::to_string(pe)] = he;
    Json out;
    out["branch_sets"] = branch;
    out["edge_assignment"] = edges;
    return out;
}

MinorModel minor_model_from_json(const Json& doc) {
    MinorModel model;
    for (const auto& [key, value] : doc.at("branch_sets").items())
        model.branch_sets[std::stoi(key)] = value.get<std::vector<VertexId>>();
    for (const auto& [key, value] : doc.at("edge_assignment").items())
        model.edge_assignment[std::stoi(key)] = value.get<EdgeId>();
    return model;
}

namespace {

Json torus_graph_json_or_abstract(const TorusGraph& tg) { return graph_to_json(tg); }

TorusGraph torus_graph_from(const Json& doc) {
    LoadedGraph loaded = graph_from_json(doc);
    if (!loaded.embedded) throw InvalidInput("expected an embedded graph document");
    return *loaded.embedded;
}

Json specs_json(const std::vector<CurveSpec>& specs) {
    Json out = Json::array();
    for (const CurveSpec& spec : specs) out.push_back(curve_spec_json(spec));
    return out;
}

std::vector<CurveSpec> specs_from(const Json& j) {
    std::vector<CurveSpec> out;
    for (const Json& item : j) out.push_back(curve_spec_from(item));
    return out;
}

}  // namespace

Json obstruction_to_json(const ObstructionCertificate& obstruction) {
    Json out;
    if (const auto* k5 = std::get_if<ObstructionK5>(&obstruction)) {
        out["kind"] = "k5_via_corner_path_reduction";
        out["specs"] = specs_json(k5->cert.specs);
        out["arrangement"] = torus_graph_json_or_abstract(k5->cert.arrangement);
        out["path"] = {{"edges", k5->cert.path.edges}, {"vertices", k5->cert.path.vertices}};
        Json sred;
        sred["spec"] = spec_json(k5->cert.s_reduction.spec);
        sred["ops"] = ops_json(k5->cert.s_reduction.ops);
        sred["iso"] = vertex_map_json(k5->cert.s_reduction.iso);
        out["s_reduction"] = sred;
        out["reduction"] = certificate_to_json(k5->cert.reduction);
    } else if (const auto* link = std::get_if<ObstructionK33ViaLink>(&obstruction)) {
        out["kind"] = "k33_via_mirror_links";
        out["specs"] = specs_json(link->cert.specs);
        out["arrangement"] = torus_graph_json_or_abstract(link->cert.arrangement);
        Json sub;
        sub["branch"] = link->cert.subdivision.branch;
        Json paths = Json::array();
        for (const auto& path : link->cert.subdivision.paths) paths.push_back(path);
        sub["paths"] = paths;
        out["subdivision"] = sub;
        out["model"] = minor_model_to_json(link->cert.model);
        out["used_fallback"] = link->cert.used_fallback;
    } else {
        const auto& ladder = std::get<ObstructionK33ViaLadder>(obstruction);
        out["kind"] = "k33_via_ladder_extension";
        out["extension"] = graph_to_json(ladder.extension.graph);
        out["side_a"] = ladder.extension.side_a;
        out["side_b"] = ladder.extension.side_b;
        out["v0"] = ladder.extension.v0;
        out["vz"] = ladder.extension.vz;
        out["rungs"] = ladder.extension.rungs;
        out["extra_edge"] = ladder.extension.extra_edge;
        out["ops"] = ops_json(ladder.reduction.ops);
        out["iso_to_k33"] = vertex_map_json(ladder.reduction.iso_to_k33);
        out["model"] = minor_model_to_json(ladder.reduction.model);
        if (ladder.witness) {
            Json w;
            w["cycle_a"] = ladder.witness->cycle_a;
            w["cycle_b"] = ladder.witness->cycle_b;
            Json rungs = Json::array();
            for (const auto& rung : ladder.witness->rungs) rungs.push_back(rung);
            w["rungs"] = rungs;
            w["attach_a"] = ladder.witness->attach_a;
            w["attach_b"] = ladder.witness->attach_b;
            out["witness"] = w;
        }
    }
    return out;
}

ObstructionCertificate obstruction_from_json(const Json& doc) {
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "k5_via_corner_path_reduction") {
        ObstructionK5 k5;
        k5.cert.specs = specs_from(doc.at("specs"));
        k5.cert.arrangement = torus_graph_from(doc.at("arrangement"));
        k5.cert.path.edges = doc.at("path").at("edges").get<std::vector<EdgeId>>();
        k5.cert.path.vertices = doc.at("path").at("vertices").get<std::vector<VertexId>>();
        const Json& sred = doc.at("s_reduction");
        k5.cert.s_reduction.spec = spec_from(sred.at("spec"));
        k5.cert.s_reduction.ops = ops_from(sred.at("ops"));
        k5.cert.s_reduction.iso = vertex_map_from(sred.at("iso"));
        k5.cert.s_reduction.reduced =
            apply_ops(k5.cert.arrangement.graph, k5.cert.s_reduction.ops);
        k5.cert.reduction = certificate_from_json(doc.at("reduction"));
        return k5;
    }
    if (kind == "k33_via_mirror_links") {
        ObstructionK33ViaLink link;
        link.cert.specs = specs_from(doc.at("specs"));
        link.cert.arrangement = torus_graph_from(doc.at("arrangement"));
        const Json& sub = doc.at("subdivision");
        auto branch = sub.at("branch").get<std::vector<VertexId>>();
        if (branch.size() != 6) throw InvalidInput("subdivision needs 6 branch vertices");
        std::copy(branch.begin(), branch.end(), link.cert.subdivision.branch.begin());
        const Json& paths = sub.at("paths");
        if (paths.size() != 9) throw InvalidInput("subdivision needs 9 paths");
        for (std::size_t i = 0; i < 9; ++i)
            link.cert.subdivision.paths[i] = paths[i].get<std::vector<EdgeId>>();
        link.cert.model = minor_model_from_json(doc.at("model"));
        link.cert.used_fallback = doc.value("used_fallback", false);
        return link;
    }
    if (kind == "k33_via_ladder_extension") {
        ObstructionK33ViaLadder ladder;
        LoadedGraph loaded = graph_from_json(doc.at("extension"));
        ladder.extension.graph = loaded.graph;
        auto side_a = doc.at("side_a").get<std::vector<VertexId>>();
        auto side_b = doc.at("side_b").get<std::vector<VertexId>>();
        auto rungs = doc.at("rungs").get<std::vector<EdgeId>>();
        if (side_a.size() != 3 || side_b.size() != 3 || rungs.size() != 3)
            throw InvalidInput("ladder extension needs 3 attachments per side");
        std::copy(side_a.begin(), side_a.end(), ladder.extension.side_a.begin());
        std::copy(side_b.begin(), side_b.end(), ladder.extension.side_b.begin());
        std::copy(rungs.begin(), rungs.end(), ladder.extension.rungs.begin());
        ladder.extension.v0 = doc.at("v0").get<VertexId>();
        ladder.extension.vz = doc.at("vz").get<VertexId>();
        ladder.extension.extra_edge = doc.at("extra_edge").get<EdgeId>();
        ladder.reduction.ops = ops_from(doc.at("ops"));
        ladder.reduction.iso_to_k33 = vertex_map_from(doc.at("iso_to_k33"));
        ladder.reduction.model = minor_model_from_json(doc.at("model"));
        ladder.reduction.reduced = apply_ops(ladder.extension.graph, ladder.reduction.ops);
        if (doc.contains("witness")) {
            H3Witness w;
            const Json& jw = doc["witness"];
            w.cycle_a = jw.at("cycle_a").get<std::vector<EdgeId>>();
            w.cycle_b = jw.at("cycle_b").get<std::vector<EdgeId>>();
            const Json& rungs_json = jw.at("rungs");
            for (std::size_t i = 0; i < 3; ++i)
                w.rungs[i] = rungs_json.at(i).get<std::vector<EdgeId>>();
            auto aa = jw.at("attach_a").get<std::vector<VertexId>>();
            auto ab = jw.at("attach_b").get<std::vector<VertexId>>();
            std::copy(aa.begin(), aa.end(), w.attach_a.begin());
            std::copy(ab.begin(), ab.end(), w.attach_b.begin());
            ladder.witness = std::move(w);
        }
        return ladder;
    }
    throw InvalidInput("unknown obstruction kind: " + kind);
}

Json verdict_to_json(const ChiralityVerdict& verdict) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["type"] = "chirality_verdict";
    switch (verdict.tag) {
        case VerdictTag::Chiral: out["verdict"] = "chiral"; break;
        case VerdictTag::TrivialEmbedding: out["verdict"] = "trivial_embedding"; break;
        case VerdictTag::AchiralCatalogued: out["verdict"] = "achiral_catalogued"; break;
        case VerdictTag::Unknown: out["verdict"] = "unknown"; break;
    }
    if (verdict.chiral_case) {
        switch (*verdict.chiral_case) {
            case ChiralCase::Knot: out["case"] = "knot"; break;
            case ChiralCase::NonHopfLink: out["case"] = "non_hopf_link"; break;
            case ChiralCase::HopfLadderCase: out["case"] = "hopf_ladder"; break;
        }
    }
    if (verdict.witness) {
        Json w;
        w["class"] = class_json(verdict.witness->cls);
        w["multiplicity"] = verdict.witness->multiplicity;
        w["cycles"] = verdict.witness->cycles;
        out["witness"] = w;
    }
    if (!verdict.note.empty()) out["note"] = verdict.note;
    if (verdict.obstruction) out["obstruction"] = obstruction_to_json(*verdict.obstruction);
    return out;
}

ChiralityVerdict verdict_from_json(const Json& doc) {
    check_schema(doc, "chirality_verdict");
    ChiralityVerdict verdict;
    std::string tag = doc.at("verdict").get<std::string>();
    if (tag == "chiral")
        verdict.tag = VerdictTag::Chiral;
    else if (tag == "trivial_embedding")
        verdict.tag = VerdictTag::TrivialEmbedding;
    else if (tag == "achiral_catalogued")
        verdict.tag = VerdictTag::AchiralCatalogued;
    else if (tag == "unknown")
        verdict.tag = VerdictTag::Unknown;
    else
        throw InvalidInput("unknown verdict tag: " + tag);
    if (doc.contains("case")) {
        std::string c = doc["case"].get<std::string>();
        if (c == "knot")
            verdict.chiral_case = ChiralCase::Knot;
        else if (c == "non_hopf_link")
            verdict.chiral_case = ChiralCase::NonHopfLink;
        else if (c == "hopf_ladder")
            verdict.chiral_case = ChiralCase::HopfLadderCase;
        else
            throw InvalidInput("unknown chiral case: " + c);
    }
    if (doc.contains("witness")) {
        WitnessCycles w;
        w.cls = class_from(doc["witness"].at("class"));
        w.multiplicity = doc["witness"].value("multiplicity", 1);
        w.cycles = doc["witness"].at("cycles").get<std::vector<std::vector<EdgeId>>>();
        verdict.witness = w;
    }
    verdict.note = doc.value("note", std::string());
    if (doc.contains("obstruction"))
        verdict.obstruction = obstruction_from_json(doc["obstruction"]);
    return verdict;
}

}  // namespace toral
