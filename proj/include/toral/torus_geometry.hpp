#pragma once

#include <optional>
#include <vector>

#include "toral/homology.hpp"
#include "toral/rational.hpp"

namespace toral {

// A point of the universal cover (or a chord endpoint inside the closed
// unit square). All predicates on these are exact.
struct PlanePoint {
    Rat x;
    Rat y;

    bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const PlanePoint& o) const { return !(*this == o); }
    PlanePoint operator+(const PlanePoint& o) const { return {x + o.x, y + o.y}; }
    PlanePoint operator-(const PlanePoint& o) const { return {x - o.x, y - o.y}; }
};

bool lex_less(const PlanePoint& a, const PlanePoint& b);

// Canonical torus representative: both coordinates reduced mod 1 into [0,1).
PlanePoint torus_rep(const PlanePoint& p);

bool on_unit_boundary(const PlanePoint& p);     // x or y in {0,1}
bool strictly_inside_unit(const PlanePoint& p); // 0 < x,y < 1

// cross(b-a, c-a)
Rat orient2d(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

// Intersection point of closed segments [a,b] and [c,d]; nullopt when the
// segments are parallel or miss each other. Exact.
std::optional<PlanePoint> segment_intersection(const PlanePoint& a, const PlanePoint& b,
                                               const PlanePoint& c, const PlanePoint& d);

// One maximal straight piece of a geodesic inside the unit square,
// parametrized by the curve parameter t (P affine in t over [t0,t1]).
struct GeodesicChord {
    Rat t0, t1;
    PlanePoint a, b;  // endpoints in the closed unit square
};

// A closed straight-line geodesic of primitive class (a,b) on the flat
// torus, parametrized as L(t) = start + t*(a,b) for t in [0,1).
struct Geodesic {
    HomologyClass cls;
    PlanePoint start;      // lift of the parameter origin
    bool corner_anchored = false;
    std::vector<GeodesicChord> chords;
};

Geodesic build_geodesic(const HomologyClass& cls, const PlanePoint& start,
                        bool corner_anchored = false);

// Lift position at parameter t (t may exceed [0,1); the curve continues
// periodically).
PlanePoint geodesic_lift(const Geodesic& geo, const Rat& t);

// In-square representative consistent with the chord decomposition.
PlanePoint geodesic_square_point(const Geodesic& geo, const Rat& t);

// An (a,b)-geodesic with k parallel copies at meridian offsets j/k. The
// torus-curve specification used by arrangements.
struct CurveSpec {
    HomologyClass cls;
    int copies = 1;
    Rat offset = 0;
    bool corner_anchored = false;
};

// k disjoint parallel geodesics for a curve spec (copy j offset by j/k).
// Copy 0 of a corner-anchored spec runs through the corner point.
std::vector<Geodesic> geodesics(const CurveSpec& spec);

}  // namespace toral
