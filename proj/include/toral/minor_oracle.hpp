#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toral/multigraph.hpp"

namespace toral {

// Branch-set witness that a pattern H is a minor of a host G. This is the
// verification currency: every obstruction certificate bottoms out in one
// of these plus verify_minor_model.
struct MinorModel {
    // pattern vertex -> nonempty set of host vertices (pairwise disjoint,
    // each inducing a connected subgraph of the host)
    std::map<VertexId, std::vector<VertexId>> branch_sets;
    // pattern edge -> host edge joining the two branch sets of its
    // endpoints (distinct host edges for distinct pattern edges)
    std::map<EdgeId, EdgeId> edge_assignment;
};

struct OracleLimits {
    int host_cap;              // max host vertices
    long long state_budget;    // explored assignment states before CapExceeded
    OracleLimits();            // host_cap from TORAL_ORACLE_CAP (default 18)
};

// Documented default for every search cap in this module; the
// TORAL_ORACLE_CAP environment variable overrides it.
int default_oracle_cap();

// Exhaustive branch-set search with reachability pruning and visited-state
// memoization. Pattern is limited to <= 6 vertices (enough for K5 and
// K3,3); the host cap is configurable. Correctness over speed.
std::optional<MinorModel> has_minor(const MultiGraph& host, const MultiGraph& pattern,
                                    const OracleLimits& limits = OracleLimits());

// Checks every MinorModel invariant. Never throws; malformed models are
// simply invalid.
bool verify_minor_model(const MultiGraph& host, const MultiGraph& pattern,
                        const MinorModel& model);

// Kuratowski: planar iff neither K5 nor K3,3 is a minor.
bool is_planar(const MultiGraph& g, const OracleLimits& limits = OracleLimits());

}  // namespace toral
