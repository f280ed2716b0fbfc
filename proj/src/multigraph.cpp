#include "toral/multigraph.hpp"

#include <algorithm>
#include <queue>

#include "toral/errors.hpp"

namespace toral {

namespace {
const std::string kEmpty;
}

VertexId MultiGraph::add_vertex() {
    while (vertices_.count(next_vertex_id_)) ++next_vertex_id_;
    VertexId id = next_vertex_id_++;
    vertices_.insert(id);
    return id;
}

void MultiGraph::add_vertex(VertexId id, const std::string& label) {
    if (vertices_.count(id)) throw InvalidInput("duplicate vertex id " + std::to_string(id));
    vertices_.insert(id);
    if (!label.empty()) vertex_labels_[id] = label;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    while (edge_index_.count(next_edge_id_)) ++next_edge_id_;
    EdgeId id = next_edge_id_++;
    add_edge(id, u, v);
    return id;
}

void MultiGraph::add_edge(EdgeId id, VertexId u, VertexId v, const std::string& label) {
    if (edge_index_.count(id)) throw InvalidInput("duplicate edge id " + std::to_string(id));
    if (!has_vertex(u) || !has_vertex(v))
        throw InvalidInput("edge endpoint is not a present vertex");
    edge_index_[id] = edges_.size();
    edges_.push_back(Edge{id, u, v});
    if (!label.empty()) edge_labels_[id] = label;
}

const Edge& MultiGraph::edge(EdgeId e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw InvalidInput("unknown edge id " + std::to_string(e));
    return edges_[it->second];
}

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) out.push_back(e.id);
    return out;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.insert(e.v);
        if (e.v == v) out.insert(e.u);
    }
    out.erase(v);
    return {out.begin(), out.end()};
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(e.id);
    return out;
}

const std::string& MultiGraph::vertex_label(VertexId v) const {
    auto it = vertex_labels_.find(v);
    return it == vertex_labels_.end() ? kEmpty : it->second;
}

const std::string& MultiGraph::edge_label(EdgeId e) const {
    auto it = edge_labels_.find(e);
    return it == edge_labels_.end() ? kEmpty : it->second;
}

void MultiGraph::set_vertex_label(VertexId v, const std::string& label) {
    if (!has_vertex(v)) throw InvalidInput("unknown vertex id");
    vertex_labels_[v] = label;
}

void MultiGraph::set_edge_label(EdgeId e, const std::string& label) {
    if (!has_edge(e)) throw InvalidInput("unknown edge id");
    edge_labels_[e] = label;
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
    g.edge(e);  // throws on unknown id
    MultiGraph out;
    for (VertexId v : g.vertices()) out.add_vertex(v, g.vertex_label(v));
    for (const Edge& ed : g.edges())
        if (ed.id != e) out.add_edge(ed.id, ed.u, ed.v, g.edge_label(ed.id));
    return out;
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop())
        throw InvalidInput("contraction is only defined for edges which are not loops");
    VertexId keep = std::min(ed.u, ed.v);
    VertexId drop = std::max(ed.u, ed.v);
    MultiGraph out;
    for (VertexId v : g.vertices())
        if (v != drop) out.add_vertex(v, g.vertex_label(v));
    for (const Edge& other : g.edges()) {
        if (other.id == e) continue;
        VertexId u = other.u == drop ? keep : other.u;
        VertexId v = other.v == drop ? keep : other.v;
        out.add_edge(other.id, u, v, g.edge_label(other.id));
    }
    return out;
}

MultiGraph delete_isolated_vertices(const MultiGraph& g) {
    std::set<VertexId> used;
    for (const Edge& e : g.edges()) {
        used.insert(e.u);
        used.insert(e.v);
    }
    MultiGraph out;
    for (VertexId v : g.vertices())
        if (used.count(v)) out.add_vertex(v, g.vertex_label(v));
    for (const Edge& e : g.edges()) out.add_edge(e.id, e.u, e.v, g.edge_label(e.id));
    return out;
}

MultiGraph simplify(const MultiGraph& g) {
    MultiGraph out;
    for (VertexId v : g.vertices()) out.add_vertex(v, g.vertex_label(v));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) continue;
        out.add_edge(e.id, e.u, e.v, g.edge_label(e.id));
    }
    return out;
}

MultiGraph apply_ops(const MultiGraph& g, const std::vector<ReplayOp>& ops) {
    MultiGraph cur = g;
    for (const ReplayOp& op : ops) {
        if (std::holds_alternative<DeleteOp>(op))
            cur = delete_edge(cur, std::get<DeleteOp>(op).edge);
        else
            cur = contract_edge(cur, std::get<ContractOp>(op).edge);
    }
    return cur;
}

bool is_simple(const MultiGraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return false;
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) return false;
    }
    return true;
}

bool is_connected(const MultiGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::set<VertexId> seen;
    std::queue<VertexId> work;
    VertexId start = *g.vertices().begin();
    seen.insert(start);
    work.push(start);
    while (!work.empty()) {
        VertexId v = work.front();
        work.pop();
        for (const Edge& e : g.edges()) {
            if (e.u != v && e.v != v) continue;
            VertexId w = e.other(v);
            if (seen.insert(w).second) work.push(w);
        }
    }
    return seen.size() == g.vertex_count();
}

namespace {

bool connected_after_removal(const MultiGraph& g, const std::set<VertexId>& removed) {
    std::set<VertexId> remaining;
    for (VertexId v : g.vertices())
        if (!removed.count(v)) remaining.insert(v);
    if (remaining.size() <= 1) return true;
    std::set<VertexId> seen;
    std::queue<VertexId> work;
    VertexId start = *remaining.begin();
    seen.insert(start);
    work.push(start);
    while (!work.empty()) {
        VertexId v = work.front();
        work.pop();
        for (const Edge& e : g.edges()) {
            if (e.u != v && e.v != v) continue;
            VertexId w = e.other(v);
            if (removed.count(w)) continue;
            if (seen.insert(w).second) work.push(w);
        }
    }
    return seen.size() == remaining.size();
}

bool some_separator_of_size(const MultiGraph& g, const std::vector<VertexId>& verts,
                            std::size_t k, std::size_t from, std::set<VertexId>& chosen) {
    if (chosen.size() == k) {
        std::size_t left = g.vertex_count() - k;
        if (left <= 1) return true;  // reduced to a single vertex (or less)
        return !connected_after_removal(g, chosen);
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
        chosen.insert(verts[i]);
        if (some_separator_of_size(g, verts, k, i + 1, chosen)) return true;
        chosen.erase(verts[i]);
    }
    return false;
}

}  // namespace

int connectivity(const MultiGraph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return 0;
    if (g.vertex_count() == 1) return 0;
    std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        std::set<VertexId> chosen;
        if (some_separator_of_size(g, verts, k, 0, chosen)) return static_cast<int>(k);
    }
    return static_cast<int>(g.vertex_count()) - 1;  // unreachable for n >= 2
}

MultiGraph complete_graph(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

MultiGraph complete_bipartite(int a, int b) {
    MultiGraph g;
    for (int i = 0; i < a + b; ++i) g.add_vertex(i);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

}  // namespace toral
