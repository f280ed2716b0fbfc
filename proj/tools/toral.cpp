// toral: torus-curve arrangements, circulant reductions, chirality
// classification, certificate verification, and flat-torus SVG figures.
//
// Exit codes, uniform across subcommands:
//   0  success / property holds
//   1  property fails, verification fails, or verdict Unknown
//   2  invalid input (parse errors, bad specs, cap exceeded)

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toral/census.hpp"
#include "toral/classify.hpp"
#include "toral/errors.hpp"
#include "toral/json_io.hpp"
#include "toral/svg_render.hpp"

namespace {

using toral::Json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw toral::InvalidInput("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw toral::InvalidInput("JSON parse error in " + path + ": " + e.what());
    }
    return doc;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw toral::InvalidInput("cannot write " + path);
    out << body;
}

void write_json_file(const std::string& path, const Json& doc) {
    write_file(path, doc.dump(2) + "\n");
}

toral::CurveSpec parse_curve(const std::string& text) {
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw toral::InvalidInput("bad --curve value: " + text);
        }
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw toral::InvalidInput("--curve expects a,b or a,b,k: " + text);
    toral::CurveSpec spec;
    spec.cls = {parts[0], parts[1]};
    spec.copies = parts.size() == 3 ? static_cast<int>(parts[2]) : 1;
    return spec;
}

toral::ClassifyOptions classify_options() {
    toral::ClassifyOptions options;
    // TORAL_ORACLE_CAP feeds OracleLimits already; scale the census cap
    // with it so larger explicitly-requested instances stay reachable
    options.census.max_graph_edges =
        std::max<std::size_t>(20, 2 * static_cast<std::size_t>(toral::default_oracle_cap()));
    return options;
}

int cmd_arrange(const std::vector<std::string>& curve_args, int corner_anchor,
                const std::string& out_path) {
    std::vector<toral::CurveSpec> specs;
    for (const std::string& text : curve_args) specs.push_back(parse_curve(text));
    if (specs.empty()) throw toral::InvalidInput("at least one --curve is required");
    if (corner_anchor >= 0) {
        if (corner_anchor >= static_cast<int>(specs.size()))
            throw toral::InvalidInput("--corner-anchor index out of range");
        specs[static_cast<std::size_t>(corner_anchor)].corner_anchored = true;
    }
    toral::TorusGraph tg;
    try {
        tg = toral::arrangement_adjusted(specs);
    } catch (const toral::DegenerateArrangement& e) {
        std::cerr << "degenerate arrangement: " << e.what() << "\n";
        return kFail;
    }
    write_json_file(out_path, toral::graph_to_json(tg));
    return kOk;
}

int cmd_reduce(int p, int q, const std::string& out_path) {
    toral::CirculantSpec spec = toral::CirculantSpec(p, q).normalized();
    toral::ReductionCertificate cert = toral::reduce_to_K5(spec);
    write_json_file(out_path, toral::certificate_to_json(cert));
    return kOk;
}

int cmd_verify(const std::string& cert_path) {
    Json doc = read_json_file(cert_path);
    if (!doc.is_object() || !doc.contains("type"))
        throw toral::InvalidInput("certificate document has no type");
    std::string diagnostic;
    bool ok = false;
    if (doc["type"] == "reduction_certificate") {
        ok = toral::verify_certificate(toral::certificate_from_json(doc), &diagnostic);
    } else if (doc["type"] == "chirality_verdict") {
        toral::ChiralityVerdict verdict = toral::verdict_from_json(doc);
        if (verdict.tag == toral::VerdictTag::Chiral) {
            if (!verdict.obstruction) {
                diagnostic = "chiral verdict without obstruction certificate";
                ok = false;
            } else {
                ok = toral::verify_obstruction(*verdict.obstruction, &diagnostic);
            }
        } else {
            ok = true;  // nothing replayable to check
        }
    } else {
        throw toral::InvalidInput("unknown certificate type: " + doc["type"].dump());
    }
    if (!ok) {
        std::cerr << "verification failed: " << diagnostic << "\n";
        return kFail;
    }
    std::cout << "certificate verified\n";
    return kOk;
}

int cmd_classify(const std::string& graph_path, const std::string& out_path) {
    toral::LoadedGraph loaded = toral::graph_from_json(read_json_file(graph_path));
    if (!loaded.embedded)
        throw toral::InvalidInput("classification needs an embedded graph document");
    toral::validate_embedding(*loaded.embedded);
    toral::ChiralityVerdict verdict =
        toral::classify_embedding(*loaded.embedded, classify_options());
    write_json_file(out_path, toral::verdict_to_json(verdict));
    if (verdict.tag == toral::VerdictTag::Unknown) {
        std::cerr << "unknown: " << verdict.note << "\n";
        return kFail;
    }
    return kOk;
}

int cmd_render(const std::string& graph_path, const std::string& out_path,
               bool universal_cover) {
    toral::LoadedGraph loaded = toral::graph_from_json(read_json_file(graph_path));
    toral::TorusGraph tg;
    if (loaded.embedded) {
        tg = *loaded.embedded;
    } else if (loaded.graph.vertex_count() == 0) {
        tg.graph = loaded.graph;  // empty square frame
    } else {
        throw toral::InvalidInput("rendering needs an embedded graph document");
    }
    toral::RenderOptions options;
    options.universal_cover = universal_cover;
    write_file(out_path, toral::render_svg(tg, options));
    return kOk;
}

int cmd_oracle_minor(const std::string& graph_path, const std::string& target,
                     const std::string& out_path) {
    toral::LoadedGraph loaded = toral::graph_from_json(read_json_file(graph_path));
    toral::MultiGraph pattern;
    if (target == "k5")
        pattern = toral::complete_graph(5);
    else if (target == "k33")
        pattern = toral::complete_bipartite(3, 3);
    else
        throw toral::InvalidInput("--target must be k5 or k33");
    auto model = toral::has_minor(loaded.graph, pattern);
    if (!model) {
        std::cerr << "no " << target << " minor\n";
        return kFail;
    }
    Json doc = toral::minor_model_to_json(*model);
    doc["schema_version"] = toral::kSchemaVersion;
    doc["type"] = "minor_model";
    doc["target"] = target;
    if (out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_json_file(out_path, doc);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spatial graphs on the standard torus: arrangements, reductions, "
                 "chirality certificates"};
    app.require_subcommand(1);

    // arrange
    auto* arrange = app.add_subcommand("arrange", "build a torus-curve arrangement");
    std::vector<std::string> curve_args;
    int corner_anchor = -1;
    std::string arrange_out;
    arrange->add_option("--curve", curve_args, "curve class a,b or a,b,k (repeatable)")
        ->required();
    arrange->add_option("--corner-anchor", corner_anchor,
                        "index of the curve spec routed through the corner");
    arrange->add_option("--out", arrange_out, "output graph JSON")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce S(p,q) to K5 with a certificate");
    int p = 0, q = 0;
    std::string reduce_out;
    reduce->add_option("--p", p)->required();
    reduce->add_option("--q", q)->required();
    reduce->add_option("--out", reduce_out, "output certificate JSON")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a certificate document");
    std::string cert_path;
    verify->add_option("--cert", cert_path)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "chirality verdict for an embedding");
    std::string classify_graph, classify_out;
    classify->add_option("--graph", classify_graph)->required();
    classify->add_option("--out", classify_out)->required();

    // render
    auto* render = app.add_subcommand("render", "flat-torus SVG figure");
    std::string render_graph, render_out;
    bool universal_cover = false;
    render->add_option("--graph", render_graph)->required();
    render->add_option("--out", render_out)->required();
    render->add_flag("--universal-cover", universal_cover,
                     "draw unwrapped lifts on the covering plane");

    // oracle minor
    auto* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    auto* minor = oracle->add_subcommand("minor", "search for a K5 or K3,3 minor");
    std::string oracle_graph, oracle_target, oracle_out;
    minor->add_option("--graph", oracle_graph)->required();
    minor->add_option("--target", oracle_target, "k5 or k33")->required();
    minor->add_option("--out", oracle_out, "write the model here instead of stdout");
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*arrange) return cmd_arrange(curve_args, corner_anchor, arrange_out);
        if (*reduce) return cmd_reduce(p, q, reduce_out);
        if (*verify) return cmd_verify(cert_path);
        if (*classify) return cmd_classify(classify_graph, classify_out);
        if (*render) return cmd_render(render_graph, render_out, universal_cover);
        if (*minor) return cmd_oracle_minor(oracle_graph, oracle_target, oracle_out);
    } catch (const toral::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const toral::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kBadInput;
    } catch (const toral::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kBadInput;
}
