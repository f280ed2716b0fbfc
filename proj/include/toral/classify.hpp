#pragma once

#include <optional>
#include <string>
#include <variant>

#include "toral/census.hpp"
#include "toral/hopf.hpp"
#include "toral/lemmas.hpp"

namespace toral {

// Two disjoint cycles forming a Hopf link plus three vertex-disjoint
// connecting paths: an H_3 topological minor inside the input embedding.
struct H3Witness {
    std::vector<EdgeId> cycle_a;
    std::vector<EdgeId> cycle_b;
    std::array<std::vector<EdgeId>, 3> rungs;
    std::array<VertexId, 3> attach_a{};
    std::array<VertexId, 3> attach_b{};
};

struct ObstructionK5 {
    Lemma1Certificate cert;
};
struct ObstructionK33ViaLink {
    Lemma2Certificate cert;
};
struct ObstructionK33ViaLadder {
    Lemma3Extension extension;
    Lemma3Result reduction;
    std::optional<H3Witness> witness;
};
using ObstructionCertificate =
    std::variant<ObstructionK5, ObstructionK33ViaLink, ObstructionK33ViaLadder>;

bool verify_obstruction(const ObstructionCertificate& obstruction,
                        std::string* diagnostic = nullptr);

enum class VerdictTag { Chiral, TrivialEmbedding, AchiralCatalogued, Unknown };
enum class ChiralCase { Knot, NonHopfLink, HopfLadderCase };

struct WitnessCycles {
    HomologyClass cls;
    int multiplicity = 1;
    std::vector<std::vector<EdgeId>> cycles;
};

struct ChiralityVerdict {
    VerdictTag tag = VerdictTag::Unknown;
    std::optional<ChiralCase> chiral_case;
    std::optional<WitnessCycles> witness;
    std::optional<ObstructionCertificate> obstruction;
    std::string note;  // catalogue reason / Unknown diagnostics
};

struct ClassifyOptions {
    CensusLimits census;
    OracleLimits oracle;
};

// Census-driven dispatch over the chirality cases: a nontrivial knot, a
// nonsplit non-Hopf link, or a Hopf link with an H_3 ladder. Rejects
// inputs whose abstract graph is nonplanar; emits Unknown when the ladder
// search fails within its caps.
ChiralityVerdict classify_embedding(const TorusGraph& tg,
                                    const ClassifyOptions& options = ClassifyOptions());

// Exhaustive disjoint-path search for the Hopf-ladder subgraph (three
// vertex-disjoint paths joining a disjoint Hopf pair).
std::optional<H3Witness> find_hopf_ladder_subgraph(const TorusGraph& tg, const Census& census);

bool check_h3_witness(const TorusGraph& tg, const H3Witness& witness);

}  // namespace toral
