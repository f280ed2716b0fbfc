#include "toral/homology.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

#include "toral/errors.hpp"

namespace toral {

bool is_null(const HomologyClass& c) { return c.a == 0 && c.b == 0; }

bool is_primitive(const HomologyClass& c) {
    return std::gcd(std::labs(c.a), std::labs(c.b)) == 1;
}

HomologyClass mirror(const HomologyClass& c) { return {c.a, -c.b}; }

HomologyClass normalize_unoriented(const HomologyClass& c) {
    if (c.a > 0 || (c.a == 0 && c.b >= 0)) return c;
    return -c;
}

long intersection_count(const HomologyClass& c1, const HomologyClass& c2) {
    if (!is_primitive(c1) || !is_primitive(c2))
        throw InvalidInput("intersection_count expects primitive classes");
    return std::labs(c1.a * c2.b - c1.b * c2.a);
}

long linking_number(const HomologyClass& c) {
    if (!is_primitive(c)) throw InvalidInput("linking_number expects a primitive class");
    if (c.a == 0 || c.b == 0) return 0;  // parallel disks, no crossings
    // Diagram: T(2|a|, 2|b|) as the closure of (s_1 ... s_{P-1})^Q on
    // P = 2|a| strands, Q = 2|b|. Components are the two parity classes of
    // starting positions; every crossing carries the sign of a*b.
    int P = static_cast<int>(2 * std::labs(c.a));
    int Q = static_cast<int>(2 * std::labs(c.b));
    int sign = (c.a > 0) == (c.b > 0) ? 1 : -1;
    std::vector<int> strand(P);
    for (int i = 0; i < P; ++i) strand[i] = i;
    long signed_crossings = 0;
    for (int rep = 0; rep < Q; ++rep) {
        for (int j = 0; j + 1 < P; ++j) {
            if ((strand[j] & 1) != (strand[j + 1] & 1)) signed_crossings += sign;
            std::swap(strand[j], strand[j + 1]);
        }
    }
    return signed_crossings / 2;
}

KnotKind classify_knot(const HomologyClass& c) {
    if (is_null(c)) return KnotKind::Trivial;
    if (!is_primitive(c))
        throw InvalidInput("classify_knot: non-primitive nonzero class " + to_string(c) +
                           " is a link, not a knot");
    if (std::labs(c.a) >= 2 && std::labs(c.b) >= 2) return KnotKind::ChiralTorusKnot;
    return KnotKind::Trivial;
}

LinkKind classify_link(const HomologyClass& c, int components) {
    if (components < 2) throw InvalidInput("classify_link requires at least 2 components");
    if (!is_primitive(c))
        throw InvalidInput("classify_link expects the primitive per-component class");
    if (c.a == 0 || c.b == 0) return LinkKind::SplitUnlink;
    if (components == 2 && std::labs(c.a) == 1 && std::labs(c.b) == 1) return LinkKind::HopfLink;
    return LinkKind::ChiralTorusLink;
}

std::string to_string(const HomologyClass& c) {
    return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

}  // namespace toral
