#pragma once

#include <array>
#include <string>

#include "toral/arrangement.hpp"
#include "toral/census.hpp"
#include "toral/circulant.hpp"
#include "toral/corner_path.hpp"
#include "toral/minor_oracle.hpp"

namespace toral {

// ---- K5 via the corner-path reduction -------------------------------

// End-to-end witness that K5 is a minor of T(p,q) (x) T(r,-s): the
// arrangement, the corner path, the replayable reduction to S(p,q), and
// the certified circulant reduction down to S(2,3) = K5.
struct Lemma1Certificate {
    std::vector<CurveSpec> specs;  // adjusted offsets actually used
    TorusGraph arrangement;
    CornerPath path;
    SReduction s_reduction;
    ReductionCertificate reduction;
};

// p >= 2, q >= 3 coprime; r, s >= 1 coprime.
Lemma1Certificate lemma1_k5(int p, int q, int r, int s);

bool verify_lemma1(const Lemma1Certificate& cert, std::string* diagnostic = nullptr);

// ---- K3,3 via parallel mirror links ----------------------------------

// Six branch vertices and nine internally disjoint paths realizing a K3,3
// subdivision inside a host graph. Path r corresponds to edge r of
// complete_bipartite(3,3) (left part {0,1,2} -> branch[0..2]).
struct K33Subdivision {
    std::array<VertexId, 6> branch{};
    std::array<std::vector<EdgeId>, 9> paths;
};

bool check_k33_subdivision(const MultiGraph& g, const K33Subdivision& sub);

// Converts a subdivision into branch sets (path interiors attach to the
// left endpoint's set; the path's last edge is the assigned edge).
MinorModel subdivision_to_minor_model(const MultiGraph& g, const K33Subdivision& sub);

struct Lemma2Certificate {
    std::vector<CurveSpec> specs;  // T(kp,kq) and T(kp,-kq), adjusted
    TorusGraph arrangement;
    K33Subdivision subdivision;
    MinorModel model;
    bool used_fallback = false;
};

// k >= 2 parallel copies of (p,q) against k copies of (p,-q); follows the
// constructive segment recipe, falling back to the minor oracle (converted
// to a subdivision) on small arrangements when the recipe fails.
Lemma2Certificate lemma2_k33(int k, int p, int q);

bool verify_lemma2(const Lemma2Certificate& cert, std::string* diagnostic = nullptr);

// ---- K3,3 via the Hopf-ladder extension ------------------------------

// The abstract Hopf ladder H_3 with one extra edge (0,Z): 0 subdivides the
// side arc between attachments 1 and 2; Z subdivides the arc between the
// rung partners of 2 and 3 on the other side.
struct Lemma3Extension {
    MultiGraph graph;
    std::array<VertexId, 3> side_a{};  // attachment vertices 1,2,3
    std::array<VertexId, 3> side_b{};  // their rung partners
    VertexId v0 = -1;
    VertexId vz = -1;
    std::array<EdgeId, 3> rungs{};
    EdgeId extra_edge = -1;
};

Lemma3Extension build_lemma3_extension();

struct Lemma3Result {
    std::vector<ReplayOp> ops;  // exactly 1 deletion + 2 contractions
    MultiGraph reduced;
    std::map<VertexId, VertexId> iso_to_k33;
    MinorModel model;  // on the extension graph
};

Lemma3Result lemma3_minor(const Lemma3Extension& ext);

bool verify_lemma3(const Lemma3Extension& ext, const Lemma3Result& result,
                   std::string* diagnostic = nullptr);

}  // namespace toral
