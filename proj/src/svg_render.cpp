#include "toral/svg_render.hpp"

#include <sstream>

namespace toral {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

struct Mapper {
    Rat scale;
    Rat off_x, off_y;
    long height;

    std::string x(const Rat& v) const { return rat_to_decimal(off_x + v * scale, 2); }
    // screen y grows downward
    std::string y(const Rat& v) const { return rat_to_decimal(off_y + (height - 0) - v * scale, 2); }
};

void polyline(std::ostringstream& out, const Mapper& m,
              const std::vector<std::pair<PlanePoint, PlanePoint>>& segments,
              const std::string& color) {
    for (const auto& [a, b] : segments) {
        out << "  <line x1=\"" << m.x(a.x) << "\" y1=\"" << m.y(a.y) << "\" x2=\"" << m.x(b.x)
            << "\" y2=\"" << m.y(b.y) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    }
}

}  // namespace

std::string render_svg(const TorusGraph& tg, const RenderOptions& options) {
    // bounding cell range (universal cover mode may leave the unit square)
    long cell_min_x = 0, cell_max_x = 1, cell_min_y = 0, cell_max_y = 1;
    std::map<EdgeId, std::vector<std::pair<PlanePoint, PlanePoint>>> drawn;
    for (const Edge& e : tg.graph.edges()) {
        auto segs = edge_segments(tg, e.id);
        if (options.universal_cover && !segs.empty()) {
            // chain the segments into one connected lift from pos(u)
            std::vector<std::pair<PlanePoint, PlanePoint>> lifted;
            PlanePoint at = tg.position.at(e.u);
            for (const auto& [a, b] : segs) {
                PlanePoint next = at + (b - a);
                lifted.push_back({at, next});
                at = next;
            }
            segs = lifted;
        }
        for (const auto& [a, b] : segs) {
            for (const PlanePoint& p : {a, b}) {
                while (Rat(cell_min_x) > p.x) --cell_min_x;
                while (Rat(cell_max_x) < p.x) ++cell_max_x;
                while (Rat(cell_min_y) > p.y) --cell_min_y;
                while (Rat(cell_max_y) < p.y) ++cell_max_y;
            }
        }
        drawn[e.id] = segs;
    }

    long cells_x = cell_max_x - cell_min_x, cells_y = cell_max_y - cell_min_y;
    long width = options.size * cells_x + 2 * options.margin;
    long height_px = options.size * cells_y + 2 * options.margin;
    Mapper m;
    m.scale = Rat(options.size);
    m.off_x = Rat(options.margin) - Rat(cell_min_x * options.size);
    m.off_y = Rat(options.margin) + Rat(cell_max_y * options.size);
    m.height = 0;
    // y(v) = off_y - v*scale maps cell_max_y -> margin (top)

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height_px << "\" viewBox=\"0 0 " << width << " " << height_px << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height_px
        << "\" fill=\"white\"/>\n";

    // unit grid (one cell in normal mode)
    for (long gx = cell_min_x; gx <= cell_max_x; ++gx)
        out << "  <line x1=\"" << m.x(Rat(gx)) << "\" y1=\"" << m.y(Rat(cell_min_y))
            << "\" x2=\"" << m.x(Rat(gx)) << "\" y2=\"" << m.y(Rat(cell_max_y))
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (long gy = cell_min_y; gy <= cell_max_y; ++gy)
        out << "  <line x1=\"" << m.x(Rat(cell_min_x)) << "\" y1=\"" << m.y(Rat(gy))
            << "\" x2=\"" << m.x(Rat(cell_max_x)) << "\" y2=\"" << m.y(Rat(gy))
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    // identification marks on the unit square: single arrows (pointing
    // right) on the horizontal sides, double arrows (pointing up) on the
    // vertical sides
    auto arrow = [&](const Rat& cx, const Rat& cy, bool horizontal) {
        if (horizontal) {
            out << "  <path d=\"M " << m.x(cx - make_rat(1, 64)) << " "
                << m.y(cy + make_rat(1, 96)) << " L " << m.x(cx + make_rat(1, 64)) << " "
                << m.y(cy) << " L " << m.x(cx - make_rat(1, 64)) << " "
                << m.y(cy - make_rat(1, 96)) << " Z\" fill=\"#444444\"/>\n";
        } else {
            out << "  <path d=\"M " << m.x(cx - make_rat(1, 96)) << " "
                << m.y(cy - make_rat(1, 64)) << " L " << m.x(cx) << " "
                << m.y(cy + make_rat(1, 64)) << " L " << m.x(cx + make_rat(1, 96)) << " "
                << m.y(cy - make_rat(1, 64)) << " Z\" fill=\"#444444\"/>\n";
        }
    };
    arrow(make_rat(1, 2), Rat(0), true);
    arrow(make_rat(1, 2), Rat(1), true);
    arrow(Rat(0), make_rat(31, 64), false);
    arrow(Rat(0), make_rat(35, 64), false);
    arrow(Rat(1), make_rat(31, 64), false);
    arrow(Rat(1), make_rat(35, 64), false);

    // edges colored by curve tag
    for (const Edge& e : tg.graph.edges()) {
        int curve = -1;
        auto it = tg.edge_curve.find(e.id);
        if (it != tg.edge_curve.end()) curve = it->second;
        std::string color = curve >= 0 ? kPalette[curve % 8] : "#222222";
        polyline(out, m, drawn[e.id], color);
    }

    // vertices with labels
    for (VertexId v : tg.graph.vertices()) {
        const PlanePoint& p = tg.position.at(v);
        out << "  <circle cx=\"" << m.x(p.x) << "\" cy=\"" << m.y(p.y)
            << "\" r=\"4\" fill=\"black\"/>\n";
        std::string label = tg.graph.vertex_label(v).empty() ? std::to_string(v)
                                                             : tg.graph.vertex_label(v);
        out << "  <text x=\"" << m.x(p.x + make_rat(1, 80)) << "\" y=\""
            << m.y(p.y + make_rat(1, 80)) << "\" font-size=\"14\" font-family=\"monospace\">"
            << label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace toral
