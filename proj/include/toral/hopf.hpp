#pragma once

#include <optional>
#include <vector>

#include "toral/arrangement.hpp"

namespace toral {

// The Hopf ladder H_n: two parallel (1,1) geodesics (the Hopf link) plus n
// crossing-free rungs of winding (0,0). Attachment sequences are listed in
// rung order.
struct HopfLadder {
    int rungs = 0;
    TorusGraph realized;
    std::vector<VertexId> side_a;       // v_i, rung i attaches here on side A
    std::vector<VertexId> side_b;       // v'_i
    std::vector<EdgeId> side_a_edges;   // along the curve
    std::vector<EdgeId> side_b_edges;
    std::vector<EdgeId> rung_edges;
};

HopfLadder build_hopf_ladder(int n);

enum class LadderChirality { Achiral, Chiral };

// Catalogue rule: achiral for n <= 2, chiral for n >= 3.
LadderChirality classify_hopf_ladder(int n);

// Orientations the rung attachment orders induce on the two sides, as
// signs relative to the realized curve directions, plus the linking number
// of the so-oriented Hopf link. Absent for n <= 2 (one or two rungs do not
// determine an orientation).
struct SideOrientations {
    int side_a = 1;
    int side_b = 1;
    long linking = 0;
};

std::optional<SideOrientations> orientation_from_rungs(const HopfLadder& ladder);

// Mirror image of the realization (classes (1,1) -> (1,-1)).
HopfLadder mirror_ladder(const HopfLadder& ladder);

// Relabel rungs cyclically by `shift` (rung i becomes rung i+shift mod n);
// orientation_from_rungs is invariant under this.
HopfLadder rotate_rung_labels(const HopfLadder& ladder, int shift);

}  // namespace toral
