#include "toral/torus_geometry.hpp"

#include <algorithm>

#include "toral/errors.hpp"

namespace toral {

bool lex_less(const PlanePoint& a, const PlanePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

PlanePoint torus_rep(const PlanePoint& p) { return {mod1(p.x), mod1(p.y)}; }

bool on_unit_boundary(const PlanePoint& p) {
    return p.x == 0 || p.x == 1 || p.y == 0 || p.y == 1;
}

bool strictly_inside_unit(const PlanePoint& p) {
    return p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1;
}

Rat orient2d(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::optional<PlanePoint> segment_intersection(const PlanePoint& a, const PlanePoint& b,
                                               const PlanePoint& c, const PlanePoint& d) {
    PlanePoint r = b - a, s = d - c;
    Rat denom = r.x * s.y - r.y * s.x;
    if (denom == 0) return std::nullopt;  // parallel (collinear overlap included)
    PlanePoint ca = c - a;
    Rat u = (ca.x * s.y - ca.y * s.x) / denom;
    Rat v = (ca.x * r.y - ca.y * r.x) / denom;
    if (u < 0 || u > 1 || v < 0 || v > 1) return std::nullopt;
    return PlanePoint{a.x + u * r.x, a.y + u * r.y};
}

Geodesic build_geodesic(const HomologyClass& cls, const PlanePoint& start,
                        bool corner_anchored) {
    if (is_null(cls) || !is_primitive(cls))
        throw InvalidInput("geodesic requires a primitive nonzero class, got " + to_string(cls));
    Geodesic geo;
    geo.cls = cls;
    geo.start = start;
    geo.corner_anchored = corner_anchored;

    // parameters in (0,1) where the lift crosses an integer grid line
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    auto add_axis_cuts = [&](const Rat& origin, long speed) {
        if (speed == 0) return;
        long lo = speed > 0 ? rat_floor(origin) + 1 : rat_floor(origin + speed) + 1;
        long hi = speed > 0 ? rat_floor(origin + speed) : rat_floor(origin);
        for (long k = lo; k <= hi; ++k) {
            Rat t = (Rat(k) - origin) / speed;
            if (t > 0 && t < 1) cuts.push_back(t);
        }
    };
    add_axis_cuts(start.x, cls.a);
    add_axis_cuts(start.y, cls.b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        GeodesicChord chord;
        chord.t0 = cuts[i];
        chord.t1 = cuts[i + 1];
        Rat tm = (chord.t0 + chord.t1) / 2;
        PlanePoint mid = geodesic_lift(geo, tm);
        PlanePoint cell{Rat(rat_floor(mid.x)), Rat(rat_floor(mid.y))};
        chord.a = geodesic_lift(geo, chord.t0) - cell;
        chord.b = geodesic_lift(geo, chord.t1) - cell;
        geo.chords.push_back(chord);
    }
    return geo;
}

PlanePoint geodesic_lift(const Geodesic& geo, const Rat& t) {
    return {geo.start.x + t * geo.cls.a, geo.start.y + t * geo.cls.b};
}

PlanePoint geodesic_square_point(const Geodesic& geo, const Rat& t) {
    Rat tt = mod1(t);
    for (const GeodesicChord& chord : geo.chords) {
        if (tt < chord.t0 || tt > chord.t1) continue;
        PlanePoint lift = geodesic_lift(geo, tt);
        PlanePoint cell = geodesic_lift(geo, chord.t0) - chord.a;
        return lift - cell;
    }
    throw Error("parameter not covered by geodesic chords");
}

std::vector<Geodesic> geodesics(const CurveSpec& spec) {
    if (spec.copies < 1) throw InvalidInput("curve spec requires copies >= 1");
    if (is_null(spec.cls) || !is_primitive(spec.cls))
        throw InvalidInput("curve spec requires a primitive nonzero class");
    std::vector<Geodesic> out;
    for (int j = 0; j < spec.copies; ++j) {
        Rat shift = spec.offset + Rat(j, spec.copies);
        shift.canonicalize();
        bool anchored = spec.corner_anchored && j == 0;
        PlanePoint start;
        if (anchored) {
            if (spec.offset != 0)
                throw InvalidInput("corner-anchored curves must have offset 0");
            start = {0, 0};
        } else if (spec.cls.a != 0) {
            start = {Rat(0), mod1(shift)};  // meridian offset
        } else {
            start = {mod1(shift), Rat(0)};  // vertical classes offset along x
        }
        out.push_back(build_geodesic(spec.cls, start, anchored));
    }
    return out;
}

}  // namespace toral
