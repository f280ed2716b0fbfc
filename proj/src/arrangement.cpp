#include "toral/arrangement.hpp"

#include <algorithm>

#include "toral/errors.hpp"

namespace toral {

namespace {

// geometry chain for the parameter range [ta, tb] of a geodesic
// (tb may exceed 1 to express the cyclic wrap past the parameter origin)
std::vector<PlanePoint> slice_geometry(const Geodesic& geo, const Rat& ta, const Rat& tb) {
    std::vector<PlanePoint> points;
    auto push = [&](const PlanePoint& p) {
        if (points.empty() || !(points.back() == p)) points.push_back(p);
    };
    Rat t = ta;
    while (t < tb) {
        Rat local = mod1(t);
        Rat base = t - local;  // integer number of full turns already taken
        // find the chord containing `local`; at a junction take the
        // outgoing chord (local == chord.t0)
        const GeodesicChord* found = nullptr;
        for (const GeodesicChord& chord : geo.chords) {
            if (local >= chord.t0 && local < chord.t1) {
                found = &chord;
                break;
            }
        }
        if (!found) throw Error("geodesic parameter not covered");
        PlanePoint cell = geodesic_lift(geo, found->t0) - found->a;
        Rat chord_end = base + found->t1;
        push(geodesic_lift(geo, local) - cell);
        if (tb <= chord_end) {
            Rat local_end = mod1(tb) == 0 && tb > ta ? Rat(1) : mod1(tb);
            push(geodesic_lift(geo, local_end) - cell);
            break;
        }
        push(found->b);
        t = chord_end;
    }
    return points;
}

HomologyClass integer_vec(const PlanePoint& p, const char* what) {
    if (!is_integer(p.x) || !is_integer(p.y)) throw Error(std::string("non-integer ") + what);
    return {rat_floor(p.x), rat_floor(p.y)};
}

}  // namespace

void add_geodesic_edges(TorusGraph& tg, const Geodesic& geo,
                        std::vector<std::pair<Rat, VertexId>> events, int curve_index) {
    if (events.empty()) throw InvalidInput("add_geodesic_edges requires at least one event");
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t n = events.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [ta, va] = events[i];
        Rat tb = i + 1 < n ? events[i + 1].first : events[0].first + 1;
        VertexId vb = events[(i + 1) % n].second;
        EdgeId e = tg.graph.add_edge(va, vb);
        tg.edge_curve[e] = curve_index;
        tg.geometry[e] = slice_geometry(geo, ta, tb);
        PlanePoint disp = geodesic_lift(geo, tb) - geodesic_lift(geo, ta);
        PlanePoint w = disp - (tg.position.at(vb) - tg.position.at(va));
        tg.winding[e] = integer_vec(w, "edge winding");
    }
}

TorusGraph arrangement(const std::vector<CurveSpec>& specs) {
    if (specs.empty()) throw InvalidInput("arrangement requires at least one curve");
    int anchored_count = 0;
    for (const CurveSpec& spec : specs)
        if (spec.corner_anchored) ++anchored_count;
    if (anchored_count > 1)
        throw InvalidInput("at most one curve spec may be corner-anchored");

    TorusGraph tg;
    std::vector<Geodesic> curves;
    for (std::size_t si = 0; si < specs.size(); ++si) {
        std::vector<Geodesic> copies = geodesics(specs[si]);
        for (std::size_t j = 0; j < copies.size(); ++j) {
            CurveRef ref;
            ref.spec_index = static_cast<int>(si);
            ref.copy_index = static_cast<int>(j);
            ref.cls = specs[si].cls;
            ref.offset = specs[si].corner_anchored && j == 0
                             ? Rat(0)
                             : mod1(specs[si].offset + Rat(static_cast<long>(j),
                                                           specs[si].copies));
            ref.corner_anchored = copies[j].corner_anchored;
            tg.curves.push_back(ref);
            curves.push_back(std::move(copies[j]));
        }
    }

    // Crossings on the square boundary hide from square-segment
    // intersection tests (the two curves touch different lifts), so they
    // are detected separately: any point of a curve on the boundary is a
    // chord endpoint, and two curves sharing such a torus point is exactly
    // a boundary crossing.
    {
        std::vector<std::set<std::pair<std::string, std::string>>> reps(curves.size());
        for (std::size_t i = 0; i < curves.size(); ++i) {
            for (const GeodesicChord& chord : curves[i].chords) {
                for (const PlanePoint& p : {chord.a, chord.b}) {
                    PlanePoint rep = torus_rep(p);
                    reps[i].insert({rat_to_string(rep.x), rat_to_string(rep.y)});
                }
            }
        }
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = i + 1; j < curves.size(); ++j)
                for (const auto& key : reps[i])
                    if (reps[j].count(key))
                        throw DegenerateArrangement(
                            "two curves meet on the square boundary");
    }

    // pairwise intersections of non-parallel curves
    struct Crossing {
        std::size_t ci, cj;
        Rat ti, tj;
        PlanePoint point;  // torus representative
    };
    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            const Geodesic& gi = curves[i];
            const Geodesic& gj = curves[j];
            if (gi.cls.a * gj.cls.b - gi.cls.b * gj.cls.a == 0) continue;  // parallel
            for (const GeodesicChord& ca : gi.chords) {
                for (const GeodesicChord& cb : gj.chords) {
                    auto hit = segment_intersection(ca.a, ca.b, cb.a, cb.b);
                    if (!hit) continue;
                    // intersections at chord endpoints sit on the square
                    // boundary or a parameter origin; both are degenerate
                    if (*hit == ca.a || *hit == ca.b || *hit == cb.a || *hit == cb.b)
                        throw DegenerateArrangement(
                            "intersection on the square boundary or a parameter origin");
                    Crossing c;
                    c.ci = i;
                    c.cj = j;
                    PlanePoint da = ca.b - ca.a;
                    c.ti = da.x != 0 ? ca.t0 + (ca.t1 - ca.t0) * (hit->x - ca.a.x) / da.x
                                     : ca.t0 + (ca.t1 - ca.t0) * (hit->y - ca.a.y) / da.y;
                    PlanePoint db = cb.b - cb.a;
                    c.tj = db.x != 0 ? cb.t0 + (cb.t1 - cb.t0) * (hit->x - cb.a.x) / db.x
                                     : cb.t0 + (cb.t1 - cb.t0) * (hit->y - cb.a.y) / db.y;
                    c.point = torus_rep(*hit);
                    if (c.point.x == 0 || c.point.y == 0)
                        throw DegenerateArrangement("intersection on the square boundary");
                    crossings.push_back(std::move(c));
                }
            }
        }
    }

    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.ci != b.ci) return a.ci < b.ci;
        if (a.ti != b.ti) return a.ti < b.ti;
        return a.cj < b.cj;
    });
    for (std::size_t i = 0; i + 1 < crossings.size(); ++i)
        for (std::size_t j = i + 1; j < crossings.size(); ++j)
            if (crossings[i].point == crossings[j].point)
                throw DegenerateArrangement("triple point");

    // vertices
    std::vector<std::vector<std::pair<Rat, VertexId>>> events(curves.size());
    VertexId next_vertex = 0;
    for (const Crossing& c : crossings) {
        VertexId v = next_vertex++;
        tg.graph.add_vertex(v);
        tg.position[v] = c.point;
        events[c.ci].push_back({c.ti, v});
        events[c.cj].push_back({c.tj, v});
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].corner_anchored) {
            VertexId v = next_vertex++;
            tg.graph.add_vertex(v, "corner");
            tg.position[v] = {Rat(0), Rat(0)};
            tg.corner_vertex = v;
            events[i].push_back({Rat(0), v});
        } else if (events[i].empty()) {
            // marker vertex so the eventless curve survives as a loop edge
            const GeodesicChord& chord = curves[i].chords.front();
            Rat tm = (chord.t0 + chord.t1) / 2;
            PlanePoint p = geodesic_square_point(curves[i], tm);
            if (!strictly_inside_unit(p))
                throw DegenerateArrangement("curve runs along the square boundary");
            VertexId v = next_vertex++;
            tg.graph.add_vertex(v);
            tg.position[v] = torus_rep(p);
            events[i].push_back({tm, v});
        }
    }
    // duplicate parameters on one curve mean two crossings at one point
    for (std::size_t i = 0; i < curves.size(); ++i) {
        auto evs = events[i];
        std::sort(evs.begin(), evs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 0; k + 1 < evs.size(); ++k)
            if (evs[k].first == evs[k + 1].first)
                throw DegenerateArrangement("coincident events on one curve");
    }

    for (std::size_t i = 0; i < curves.size(); ++i)
        add_geodesic_edges(tg, curves[i], events[i], static_cast<int>(i));
    return tg;
}

TorusGraph arrangement_adjusted(std::vector<CurveSpec> specs) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return arrangement(specs);
        } catch (const DegenerateArrangement&) {
            mpz_class lcm = 1;
            long max_entry = 1;
            for (const CurveSpec& spec : specs) {
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), spec.offset.get_den().get_mpz_t());
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        mpz_class(spec.copies).get_mpz_t());
                max_entry = std::max({max_entry, std::labs(spec.cls.a), std::labs(spec.cls.b)});
            }
            // Degeneracies are linear forms in the offsets whose integer
            // coefficients are bounded by products of class entries.
            // Shifting offset i by eps^(i+1) with eps below 1/(coefficient
            // bound) changes every such form by a nonzero amount, so the
            // violated condition cannot survive the shift.
            long bound = 2 * (static_cast<long>(specs.size()) + 2) * (max_entry + 1) *
                         (max_entry + 1);
            Rat eps = Rat(1) / (Rat(lcm) * bound);
            Rat delta = eps;
            for (CurveSpec& spec : specs) {
                delta = delta * eps;
                if (spec.corner_anchored) continue;
                spec.offset = mod1(spec.offset + delta);
            }
        }
    }
    throw DegenerateArrangement("offset adjustment failed to reach general position");
}

std::vector<CurveSpec> arrangement_specs(const TorusGraph& tg) {
    std::vector<CurveSpec> specs;
    for (const CurveRef& ref : tg.curves) {
        if (ref.copy_index != 0) {
            specs.back().copies += 1;
            continue;
        }
        CurveSpec spec;
        spec.cls = ref.cls;
        spec.copies = 1;
        spec.offset = ref.offset;
        spec.corner_anchored = ref.corner_anchored;
        specs.push_back(spec);
    }
    return specs;
}

std::vector<std::pair<PlanePoint, PlanePoint>> edge_segments(const TorusGraph& tg, EdgeId e) {
    const auto& pts = tg.geometry.at(e);
    std::vector<std::pair<PlanePoint, PlanePoint>> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (torus_rep(pts[i]) == torus_rep(pts[i + 1])) continue;  // wrap pair
        out.emplace_back(pts[i], pts[i + 1]);
    }
    return out;
}

bool edge_touches_boundary_interior(const TorusGraph& tg, EdgeId e) {
    const auto& pts = tg.geometry.at(e);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (on_unit_boundary(pts[i])) return true;
    return false;
}

HomologyClass cycle_class(const TorusGraph& tg, const std::vector<WalkStep>& walk) {
    if (walk.empty()) throw InvalidInput("empty walk");
    HomologyClass total{0, 0};
    VertexId expected = -1;
    VertexId first = -1;
    for (const WalkStep& step : walk) {
        const Edge& e = tg.graph.edge(step.edge);
        VertexId from = step.forward ? e.u : e.v;
        VertexId to = step.forward ? e.v : e.u;
        if (expected != -1 && from != expected) throw InvalidInput("walk is not connected");
        if (first == -1) first = from;
        expected = to;
        HomologyClass w = tg.winding.at(step.edge);
        total = step.forward ? total + w : total - w;
    }
    if (expected != first) throw InvalidInput("walk is not closed");
    return total;
}

HomologyClass cycle_class(const TorusGraph& tg, const std::vector<EdgeId>& walk) {
    if (walk.empty()) throw InvalidInput("empty walk");
    // infer directions by chaining; try both orientations of the first edge
    for (bool first_forward : {true, false}) {
        std::vector<WalkStep> steps;
        const Edge& e0 = tg.graph.edge(walk[0]);
        steps.push_back({walk[0], first_forward});
        VertexId at = first_forward ? e0.v : e0.u;
        bool ok = true;
        for (std::size_t i = 1; i < walk.size() && ok; ++i) {
            const Edge& e = tg.graph.edge(walk[i]);
            if (e.u == at)
                steps.push_back({walk[i], true}), at = e.v;
            else if (e.v == at)
                steps.push_back({walk[i], false}), at = e.u;
            else
                ok = false;
        }
        if (!ok) continue;
        VertexId start = first_forward ? e0.u : e0.v;
        if (at != start) continue;
        return cycle_class(tg, steps);
    }
    throw InvalidInput("edge sequence is not a closed walk");
}

void validate_embedding(const TorusGraph& tg) {
    for (VertexId v : tg.graph.vertices()) {
        auto it = tg.position.find(v);
        if (it == tg.position.end()) throw InvalidInput("vertex without position");
        const PlanePoint& p = it->second;
        if (p.x < 0 || p.x >= 1 || p.y < 0 || p.y >= 1)
            throw InvalidInput("vertex position outside [0,1)^2");
    }
    for (const Edge& e : tg.graph.edges()) {
        if (!tg.winding.count(e.id)) throw InvalidInput("edge without winding");
        auto git = tg.geometry.find(e.id);
        if (git == tg.geometry.end()) throw InvalidInput("edge without geometry");
        const auto& pts = git->second;
        if (pts.size() < 2) throw InvalidInput("edge geometry too short");
        if (torus_rep(pts.front()) != tg.position.at(e.u))
            throw InvalidInput("edge geometry does not start at its source vertex");
        if (torus_rep(pts.back()) != tg.position.at(e.v))
            throw InvalidInput("edge geometry does not end at its target vertex");
        PlanePoint disp{Rat(0), Rat(0)};
        for (const auto& [a, b] : edge_segments(tg, e.id)) {
            if (a == b) throw InvalidInput("zero-length geometry segment");
            disp = disp + (b - a);
        }
        HomologyClass w = tg.winding.at(e.id);
        PlanePoint expected = (tg.position.at(e.v) - tg.position.at(e.u)) +
                              PlanePoint{Rat(w.a), Rat(w.b)};
        if (disp != expected) throw InvalidInput("edge winding inconsistent with geometry");
        for (const PlanePoint& p : pts)
            if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1)
                throw InvalidInput("edge geometry leaves the unit square");
    }

    // exact pairwise disjointness of drawn segments
    struct Seg {
        EdgeId edge;
        std::size_t index;
        PlanePoint a, b;
    };
    std::vector<Seg> segs;
    for (const Edge& e : tg.graph.edges()) {
        auto list = edge_segments(tg, e.id);
        for (std::size_t i = 0; i < list.size(); ++i)
            segs.push_back({e.id, i, list[i].first, list[i].second});
    }
    auto is_vertex_point = [&](const PlanePoint& p) {
        PlanePoint rep = torus_rep(p);
        for (const auto& [v, pos] : tg.position)
            if (pos == rep) return true;
        return false;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            bool same_edge = s.edge == t.edge;
            auto hit = segment_intersection(s.a, s.b, t.a, t.b);
            if (!hit) {
                // parallel: reject collinear overlap
                if (orient2d(s.a, s.b, t.a) == 0 && orient2d(s.a, s.b, t.b) == 0) {
                    auto within = [&](const PlanePoint& p) {
                        Rat lo_x = std::min(s.a.x, s.b.x), hi_x = std::max(s.a.x, s.b.x);
                        Rat lo_y = std::min(s.a.y, s.b.y), hi_y = std::max(s.a.y, s.b.y);
                        return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y &&
                               p != s.a && p != s.b;
                    };
                    if (within(t.a) || within(t.b))
                        throw InvalidInput("overlapping collinear segments");
                }
                continue;
            }
            bool endpoint_of_s = *hit == s.a || *hit == s.b;
            bool endpoint_of_t = *hit == t.a || *hit == t.b;
            if (same_edge && endpoint_of_s && endpoint_of_t) continue;
            if (endpoint_of_s && endpoint_of_t && is_vertex_point(*hit)) continue;
            throw InvalidInput("edges cross away from a shared vertex");
        }
    }
    // boundary wrap points: a torus point on the boundary may be used by
    // only one edge transit (or be the corner vertex)
    std::map<std::pair<std::string, std::string>, int> boundary_uses;
    for (const Edge& e : tg.graph.edges()) {
        const auto& pts = tg.geometry.at(e.id);
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (!on_unit_boundary(pts[i])) continue;
            PlanePoint rep = torus_rep(pts[i]);
            boundary_uses[{rat_to_string(rep.x), rat_to_string(rep.y)}] += 1;
        }
    }
    for (const auto& [key, count] : boundary_uses) {
        // each wrap contributes two stored points (exit + entry)
        if (count != 2) throw InvalidInput("boundary point shared between edge transits");
    }
}

TorusGraph mirror_embedding(const TorusGraph& tg) {
    TorusGraph out = tg;
    auto flip = [](const PlanePoint& p) { return PlanePoint{p.x, 1 - p.y}; };
    for (auto& [v, pos] : out.position) pos = torus_rep(PlanePoint{pos.x, -pos.y});
    for (auto& [e, pts] : out.geometry)
        for (PlanePoint& p : pts) p = flip(p);
    // y' = -y mod 1 shifts by one extra unit wherever y != 0, which feeds
    // into the winding bookkeeping per endpoint
    for (auto& [e, w] : out.winding) {
        const Edge& ed = out.graph.edge(e);
        long cu = tg.position.at(ed.u).y == 0 ? 0 : 1;
        long cv = tg.position.at(ed.v).y == 0 ? 0 : 1;
        w = {w.a, -w.b + cu - cv};
    }
    for (CurveRef& ref : out.curves) ref.cls = {ref.cls.a, -ref.cls.b};
    return out;
}

}  // namespace toral
