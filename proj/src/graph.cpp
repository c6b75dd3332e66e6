#include "pcst/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace pcst {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph::Graph(std::uint32_t vertex_count, std::vector<GraphEdge> edges,
             std::vector<double> prizes, std::vector<VertexId> compulsory)
    : vertex_count_(vertex_count) {
    if (vertex_count == 0) throw DomainError("graph needs at least one vertex");
    if (prizes.size() != vertex_count)
        throw DomainError("prize vector size does not match vertex count");

    prizes_.assign(vertex_count_ + 1, 0.0);
    for (std::uint32_t i = 0; i < vertex_count; ++i) {
        if (!(prizes[i] >= 0.0))
            throw DomainError("prize of vertex " + std::to_string(i + 1) + " is negative");
        prizes_[i + 1] = prizes[i];
        total_prize_ += prizes[i];
    }

    edges_.reserve(edges.size());
    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(edges.size() * 2);
    for (const GraphEdge& e : edges) {
        if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_)
            throw DomainError("edge endpoint out of range");
        if (e.u == e.v) throw DomainError("self-loop rejected");
        if (!(e.cost > 0.0)) throw DomainError("edge cost must be positive");
        GraphEdge norm{std::min(e.u, e.v), std::max(e.u, e.v), e.cost};
        auto [it, inserted] = seen.emplace(pair_key(norm.u, norm.v),
                                           static_cast<EdgeId>(edges_.size()));
        if (inserted) {
            edges_.push_back(norm);
        } else if (norm.cost < edges_[it->second].cost) {
            // parallel edges collapse to the single cheapest copy
            edges_[it->second].cost = norm.cost;
        }
    }
    for (const GraphEdge& e : edges_) {
        total_edge_cost_ += e.cost;
        max_edge_cost_ = std::max(max_edge_cost_, e.cost);
    }

    compulsory_ = std::move(compulsory);
    std::sort(compulsory_.begin(), compulsory_.end());
    compulsory_.erase(std::unique(compulsory_.begin(), compulsory_.end()), compulsory_.end());
    for (VertexId v : compulsory_)
        if (v < 1 || v > vertex_count_)
            throw DomainError("compulsory terminal out of range");

    adj_offset_.assign(vertex_count_ + 2, 0);
    for (const GraphEdge& e : edges_) {
        ++adj_offset_[e.u + 1];
        ++adj_offset_[e.v + 1];
    }
    for (std::size_t i = 1; i < adj_offset_.size(); ++i) adj_offset_[i] += adj_offset_[i - 1];
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end());
    for (EdgeId i = 0; i < edges_.size(); ++i) {
        const GraphEdge& e = edges_[i];
        adjacency_[cursor[e.u]++] = Neighbor{e.v, i};
        adjacency_[cursor[e.v]++] = Neighbor{e.u, i};
    }
}

bool Graph::is_compulsory(VertexId v) const {
    return std::binary_search(compulsory_.begin(), compulsory_.end(), v);
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_ || u == v)
        return kInvalidEdge;
    // scan the smaller adjacency list
    VertexId a = degree(u) <= degree(v) ? u : v;
    VertexId b = (a == u) ? v : u;
    for (const Neighbor& n : neighbors(a))
        if (n.to == b) return n.edge;
    return kInvalidEdge;
}

bool SolutionTree::contains_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

void SolutionTree::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool is_connected(const Graph& g) {
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Graph::Neighbor& n : g.neighbors(v)) {
            if (!seen[n.to]) {
                seen[n.to] = 1;
                ++reached;
                stack.push_back(n.to);
            }
        }
    }
    return reached == g.vertex_count();
}

void validate_tree(const Graph& g, const SolutionTree& t) {
    if (t.vertices.empty()) throw StructuralError("tree has no vertices");
    if (!std::is_sorted(t.vertices.begin(), t.vertices.end()) ||
        std::adjacent_find(t.vertices.begin(), t.vertices.end()) != t.vertices.end())
        throw StructuralError("tree vertex list not sorted/unique");
    for (VertexId v : t.vertices)
        if (v < 1 || v > g.vertex_count()) throw StructuralError("tree vertex out of range");
    if (t.edges.size() + 1 != t.vertices.size())
        throw StructuralError("edge count must equal vertex count - 1");

    // map graph vertex -> local slot for the traversal
    std::unordered_map<VertexId, std::uint32_t> local;
    local.reserve(t.vertices.size() * 2);
    for (std::uint32_t i = 0; i < t.vertices.size(); ++i) local.emplace(t.vertices[i], i);

    std::vector<std::vector<std::uint32_t>> adj(t.vertices.size());
    EdgeId prev = kInvalidEdge;
    for (EdgeId e : t.edges) {
        if (e >= g.edge_count()) throw StructuralError("tree references a foreign edge");
        if (e == prev) throw StructuralError("duplicate edge in tree");
        prev = e;
        auto iu = local.find(g.edge(e).u);
        auto iv = local.find(g.edge(e).v);
        if (iu == local.end() || iv == local.end())
            throw StructuralError("tree edge endpoint not in vertex set");
        adj[iu->second].push_back(iv->second);
        adj[iv->second].push_back(iu->second);
    }

    std::vector<char> seen(t.vertices.size(), 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != t.vertices.size()) throw StructuralError("tree is disconnected");
}

double net_cost(const Graph& g, const SolutionTree& t) {
    validate_tree(g, t);
    double inside = 0.0;
    for (VertexId v : t.vertices) inside += g.prize(v);
    double cost = 0.0;
    for (EdgeId e : t.edges) cost += g.edge(e).cost;
    return (g.total_prize() - inside) + cost;
}

SolutionTree minimum_spanning_tree(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n == 1) return SolutionTree::single_vertex(1);

    struct Candidate {
        double cost;
        VertexId lo, hi;   // normalized endpoints, tie-break key
        EdgeId edge;
        VertexId attach;   // vertex this edge would bring into the tree
        bool operator>(const Candidate& o) const {
            if (cost != o.cost) return cost > o.cost;
            if (lo != o.lo) return lo > o.lo;
            return hi > o.hi;
        }
    };

    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
    std::vector<char> in_tree(n + 1, 0);
    SolutionTree tree;
    tree.vertices.reserve(n);
    tree.edges.reserve(n - 1);

    auto add_vertex = [&](VertexId v) {
        in_tree[v] = 1;
        tree.vertices.push_back(v);
        for (const Graph::Neighbor& nb : g.neighbors(v)) {
            if (!in_tree[nb.to]) {
                const GraphEdge& e = g.edge(nb.edge);
                heap.push(Candidate{e.cost, e.u, e.v, nb.edge, nb.to});
            }
        }
    };

    add_vertex(1);
    while (tree.vertices.size() < n) {
        if (heap.empty()) throw ConnectivityError("graph is disconnected");
        Candidate c = heap.top();
        heap.pop();
        if (in_tree[c.attach]) continue;
        tree.edges.push_back(c.edge);
        add_vertex(c.attach);
    }
    tree.normalize();
    return tree;
}

}  // namespace pcst
