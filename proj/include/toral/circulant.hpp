#pragma once

#include <string>
#include <variant>
#include <vector>

#include "toral/multigraph.hpp"

namespace toral {

// The circulant graph S(p,q): a cycle on p+q vertices v_0..v_{p+q-1} plus
// chords c_j joining v_j and v_{j+p} (mod p+q). Equals the Cayley graph of
// Z/(p+q) with generator set {1, p}; S(p,q) = S(q,p).
struct CirculantSpec {
    int p = 0;
    int q = 0;

    CirculantSpec() = default;
    CirculantSpec(int p_, int q_);  // validates p,q >= 1, gcd = 1, p+q >= 3

    int order() const { return p + q; }
    CirculantSpec normalized() const;  // p < q, using S(p,q) = S(q,p)
    bool operator==(const CirculantSpec&) const = default;
};

// Cycle edge j has edge id j and joins v_j, v_{j+1}; chord c_j has edge id
// (p+q)+j and joins v_j, v_{j+p}. Vertex ids are 0..p+q-1.
MultiGraph build_S(const CirculantSpec& spec);

inline EdgeId cycle_edge_id(const CirculantSpec&, int j) { return j; }
inline EdgeId chord_edge_id(const CirculantSpec& spec, int j) { return spec.order() + j; }

// Independent Cayley-graph construction of Z/(p+q) with generators {1, p},
// checked isomorphic to build_S.
bool cayley_check(const CirculantSpec& spec);

// One "taking a minor" step: keep the 2*floor((p+q)/p)+1 chords traveled
// from v_0, delete the rest, collapse the cycle runs between travel
// vertices, and close up at v_0. Result is S(2, 2*floor((p+q)/p)-1).
struct MinorStepData {
    CirculantSpec from;
    CirculantSpec to;
    std::vector<int> kept_chords;            // chord indices, travel order
    std::vector<int> deleted_chords;         // ascending
    std::vector<EdgeId> contracted_cycle_edges;  // in contraction order
};

// One "inversion plus renaming" step on S(2,q): exchange the roles of the
// cycle and the chord cycle via v_j -> v_{j*p' mod (2+q)} where p' is the
// modular inverse of 2.
struct InvertRelabelData {
    CirculantSpec from;
    CirculantSpec to;  // normalized (q', p')
    int p_prime = 0;
    int q_prime = 0;
    std::vector<int> permutation;  // old vertex index -> new vertex index
};

// Recorded when p = 2: the kept-chord formula returns the graph itself,
// so no proper minor is taken before inverting.
struct SkipMinorData {
    CirculantSpec spec;
    std::string reason;
};

using ReductionStep = std::variant<MinorStepData, InvertRelabelData, SkipMinorData>;

ReductionStep minor_step(const CirculantSpec& spec, bool allow_skip = true);
ReductionStep invert_relabel(const CirculantSpec& spec);  // requires p = 2, q odd

// Replayable witness that K5 is a minor of S(p,q): the full alternating
// minor / invert+rename chain down to S(2,3), plus an explicit
// isomorphism from S(2,3) to K5.
struct ReductionCertificate {
    CirculantSpec initial;
    std::vector<ReductionStep> steps;
    std::vector<int> final_isomorphism;  // S(2,3) vertex j -> K5 vertex
};

ReductionCertificate reduce_to_K5(const CirculantSpec& spec);

// Replays every concrete op via the multigraph operations, checks each
// intermediate against build_S of the declared result spec, the monotone
// size decrease, and the final isomorphism to K5.
bool verify_certificate(const ReductionCertificate& cert, std::string* diagnostic = nullptr);

// The sequence of specs visited, starting at the initial one; SkipMinor
// steps do not change the spec and add no entry.
std::vector<CirculantSpec> spec_chain(const ReductionCertificate& cert);

// True iff chords c_x and c_y of S(p,q) cross when drawn inside the cycle.
bool chords_interleave(int order, int p, int x, int y);

// Concrete ops of a minor step, in replay order (deletions then
// contractions).
std::vector<ReplayOp> minor_step_ops(const MinorStepData& step);

}  // namespace toral
