#pragma once

#include <cstdint>
#include <string>

namespace toral {

// Winding pair (a,b) of a closed curve on the torus: a times around the
// longitude (+x), b times around the meridian (+y). Also used for per-edge
// lift displacements, where any integer pair is meaningful.
struct HomologyClass {
    long a = 0;
    long b = 0;

    bool operator==(const HomologyClass&) const = default;
    auto operator<=>(const HomologyClass&) const = default;
    HomologyClass operator+(const HomologyClass& o) const { return {a + o.a, b + o.b}; }
    HomologyClass operator-(const HomologyClass& o) const { return {a - o.a, b - o.b}; }
    HomologyClass operator-() const { return {-a, -b}; }
};

bool is_null(const HomologyClass& c);
bool is_primitive(const HomologyClass& c);  // gcd(|a|,|b|) == 1

// Mirror image: T(-a,b) = T(a,-b).
HomologyClass mirror(const HomologyClass& c);

// Sign normal form for unoriented cycles: (a,b) ~ (-a,-b).
HomologyClass normalize_unoriented(const HomologyClass& c);

// Minimal number of intersections of two curves of primitive classes:
// |a1*b2 - b1*a2|.
long intersection_count(const HomologyClass& c1, const HomologyClass& c2);

// Pairwise linking number of two parallel (a,b) curves on the standard
// torus, computed as half the signed inter-component crossing count on the
// closed-braid diagram of T(2a,2b). Equals a*b.
long linking_number(const HomologyClass& c);

enum class KnotKind : std::uint8_t { Trivial, ChiralTorusKnot };
// Nontrivial (hence chiral) iff |a| >= 2 and |b| >= 2. Non-primitive
// nonzero classes are rejected.
KnotKind classify_knot(const HomologyClass& c);

enum class LinkKind : std::uint8_t { SplitUnlink, HopfLink, ChiralTorusLink };
// k parallel copies of a primitive class c: split iff a*b = 0; Hopf iff
// k = 2 and |a| = |b| = 1; otherwise a chiral nonsplit torus link.
LinkKind classify_link(const HomologyClass& c, int components);

std::string to_string(const HomologyClass& c);

}  // namespace toral
