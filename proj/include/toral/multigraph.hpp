#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace toral {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;
    bool is_loop() const { return u == v; }
    // The endpoint that is not `x` (== x for loops).
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Labeled abstract multigraph. Parallel edges and loops are permitted.
// Values are immutable once built; the minor operations below are pure
// functions returning fresh graphs.
class MultiGraph {
public:
    VertexId add_vertex();
    void add_vertex(VertexId id, const std::string& label = "");
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge(EdgeId id, VertexId u, VertexId v, const std::string& label = "");

    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return edge_index_.count(e) != 0; }
    const Edge& edge(EdgeId e) const;

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Loops contribute 2.
    int degree(VertexId v) const;
    std::vector<EdgeId> incident_edges(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // deduplicated, sorted
    // Edges joining u and v (either direction); loops only when u == v.
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

    const std::string& vertex_label(VertexId v) const;
    const std::string& edge_label(EdgeId e) const;
    void set_vertex_label(VertexId v, const std::string& label);
    void set_edge_label(EdgeId e, const std::string& label);

private:
    std::set<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<EdgeId, std::size_t> edge_index_;
    std::map<VertexId, std::string> vertex_labels_;
    std::map<EdgeId, std::string> edge_labels_;
    VertexId next_vertex_id_ = 0;
    EdgeId next_edge_id_ = 0;
};

// --- minor operations (pure) ---

MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

// Merges the endpoints of `e` into min(u,v), keeping every other edge
// attached. Parallel edges and newly formed loops are preserved; loops
// cannot be contracted.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);

MultiGraph delete_isolated_vertices(const MultiGraph& g);

// Drops loops and collapses parallel edges (keeps the lowest edge id).
// Contraction never simplifies implicitly; this is the explicit step.
MultiGraph simplify(const MultiGraph& g);

struct DeleteOp {
    EdgeId edge;
};
struct ContractOp {
    EdgeId edge;
};
using ReplayOp = std::variant<DeleteOp, ContractOp>;

MultiGraph apply_ops(const MultiGraph& g, const std::vector<ReplayOp>& ops);

// --- structural predicates ---

bool is_simple(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Vertex connectivity by exhaustive separator search. Disconnected (or
// empty) graphs give 0; K_n gives n-1.
int connectivity(const MultiGraph& g);

// --- stock graphs ---

MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);

}  // namespace toral
