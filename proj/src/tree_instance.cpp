#include "pcst/tree_instance.hpp"

#include <algorithm>
#include <cmath>

namespace pcst {

void TreeInstance::build_adjacency() {
    if (edges_.size() + 1 != vertex_count_)
        throw StructuralError("tree instance needs exactly |V|-1 edges");
    adj_offset_.assign(vertex_count_ + 2, 0);
    for (const TreeEdge& e : edges_) {
        if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_ || e.u == e.v)
            throw StructuralError("tree instance edge endpoint invalid");
        if (!(e.cost > 0.0)) throw DomainError("tree instance edge cost must be positive");
        ++adj_offset_[e.u + 1];
        ++adj_offset_[e.v + 1];
    }
    for (std::size_t i = 1; i < adj_offset_.size(); ++i) adj_offset_[i] += adj_offset_[i - 1];
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end());
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        const TreeEdge& e = edges_[i];
        adjacency_[cursor[e.u]++] = Neighbor{e.v, i};
        adjacency_[cursor[e.v]++] = Neighbor{e.u, i};
    }

    // connectivity: |V|-1 edges + one traversal reaching everything = tree
    std::vector<char> seen(vertex_count_ + 1, 0);
    std::vector<std::uint32_t> stack{1};
    seen[1] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (const Neighbor& n : neighbors(v)) {
            if (!seen[n.to]) {
                seen[n.to] = 1;
                ++reached;
                stack.push_back(n.to);
            }
        }
    }
    if (reached != vertex_count_) throw StructuralError("tree instance is disconnected");

    sentinel_ = 0.0;
    for (const TreeEdge& e : edges_) sentinel_ += std::abs(e.cost);
    for (std::uint32_t v = 1; v <= vertex_count_; ++v) sentinel_ += std::abs(weights_[v]);
}

TreeInstance TreeInstance::standalone(std::vector<double> weights, std::vector<TreeEdge> edges,
                                      std::vector<std::uint32_t> compulsory) {
    TreeInstance t;
    t.vertex_count_ = static_cast<std::uint32_t>(weights.size());
    if (t.vertex_count_ == 0) throw StructuralError("tree instance needs at least one vertex");
    t.weights_.assign(t.vertex_count_ + 1, 0.0);
    for (std::uint32_t i = 0; i < weights.size(); ++i) t.weights_[i + 1] = weights[i];
    t.edges_ = std::move(edges);
    t.parent_vertex_.resize(t.vertex_count_ + 1);
    for (std::uint32_t v = 0; v <= t.vertex_count_; ++v) t.parent_vertex_[v] = v;
    t.compulsory_ = std::move(compulsory);
    std::sort(t.compulsory_.begin(), t.compulsory_.end());
    t.compulsory_.erase(std::unique(t.compulsory_.begin(), t.compulsory_.end()),
                        t.compulsory_.end());
    for (std::uint32_t c : t.compulsory_)
        if (c < 1 || c > t.vertex_count_) throw DomainError("compulsory vertex out of range");
    t.build_adjacency();
    return t;
}

TreeInstance TreeInstance::from_solution(const Graph& g, const SolutionTree& sol) {
    validate_tree(g, sol);
    TreeInstance t;
    t.vertex_count_ = static_cast<std::uint32_t>(sol.vertices.size());
    t.weights_.assign(t.vertex_count_ + 1, 0.0);
    t.parent_vertex_.assign(t.vertex_count_ + 1, 0);

    // sol.vertices is sorted, so local ids preserve parent-id order
    std::vector<std::uint32_t> local_of;  // parent -> local, dense map
    local_of.assign(g.vertex_count() + 1, 0);
    for (std::uint32_t i = 0; i < sol.vertices.size(); ++i) {
        VertexId pv = sol.vertices[i];
        t.parent_vertex_[i + 1] = pv;
        t.weights_[i + 1] = g.prize(pv);
        local_of[pv] = i + 1;
    }

    t.edges_.reserve(sol.edges.size());
    for (EdgeId e : sol.edges) {
        const GraphEdge& ge = g.edge(e);
        t.edges_.push_back(TreeEdge{local_of[ge.u], local_of[ge.v], ge.cost, e});
    }

    for (VertexId c : g.compulsory()) {
        if (local_of[c] == 0)
            throw StructuralError("solution tree misses compulsory terminal " +
                                  std::to_string(c));
        t.compulsory_.push_back(local_of[c]);
    }
    std::sort(t.compulsory_.begin(), t.compulsory_.end());
    t.build_adjacency();
    return t;
}

void validate_subtree(const TreeInstance& t, const Subtree& sel) {
    if (sel.vertices.empty()) throw StructuralError("subtree has no vertices");
    if (sel.edges.size() + 1 != sel.vertices.size())
        throw StructuralError("subtree edge count must equal vertex count - 1");
    if (!std::is_sorted(sel.vertices.begin(), sel.vertices.end()) ||
        std::adjacent_find(sel.vertices.begin(), sel.vertices.end()) != sel.vertices.end())
        throw StructuralError("subtree vertex list not sorted/unique");
    for (std::uint32_t v : sel.vertices)
        if (v < 1 || v > t.vertex_count()) throw StructuralError("subtree vertex out of range");

    auto in_sel = [&](std::uint32_t v) {
        return std::binary_search(sel.vertices.begin(), sel.vertices.end(), v);
    };
    for (std::uint32_t e : sel.edges) {
        if (e >= t.edges().size()) throw StructuralError("subtree references a foreign edge");
        if (!in_sel(t.edges()[e].u) || !in_sel(t.edges()[e].v))
            throw StructuralError("subtree edge endpoint not selected");
    }
    // connectivity within the selection; edge count then rules out cycles
    std::vector<char> edge_ok(t.edges().size(), 0);
    for (std::uint32_t e : sel.edges) edge_ok[e] = 1;
    std::vector<char> seen_v(t.vertex_count() + 1, 0);
    std::vector<std::uint32_t> stack{sel.vertices.front()};
    seen_v[sel.vertices.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (const TreeInstance::Neighbor& n : t.neighbors(v)) {
            if (edge_ok[n.edge] && !seen_v[n.to]) {
                seen_v[n.to] = 1;
                ++reached;
                stack.push_back(n.to);
            }
        }
    }
    if (reached != sel.vertices.size()) throw StructuralError("subtree is disconnected");
}

double net_weight(const TreeInstance& t, const Subtree& sel) {
    validate_subtree(t, sel);
    double w = 0.0;
    for (std::uint32_t v : sel.vertices) w += t.weight(v);
    double c = 0.0;
    for (std::uint32_t e : sel.edges) c += t.edges()[e].cost;
    return w - c;
}

SolutionTree to_solution(const TreeInstance& t, const Subtree& sel) {
    SolutionTree out;
    out.vertices.reserve(sel.vertices.size());
    for (std::uint32_t v : sel.vertices) out.vertices.push_back(t.parent_vertex(v));
    out.edges.reserve(sel.edges.size());
    for (std::uint32_t e : sel.edges) {
        EdgeId ge = t.edges()[e].graph_edge;
        if (ge == kInvalidEdge)
            throw StructuralError("standalone tree instance has no parent graph");
        out.edges.push_back(ge);
    }
    out.normalize();
    return out;
}

}  // namespace pcst
