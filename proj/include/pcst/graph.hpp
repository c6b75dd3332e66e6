#ifndef PCST_GRAPH_HPP
#define PCST_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pcst/errors.hpp"

namespace pcst {

/// Vertex ids are 1-based contiguous integers, matching the STP file format.
using VertexId = std::uint32_t;
/// Edge ids index into Graph::edges().
using EdgeId = std::uint32_t;

constexpr EdgeId kInvalidEdge = static_cast<EdgeId>(-1);

struct GraphEdge {
    VertexId u;  // u < v after normalization
    VertexId v;
    double cost;
};

/// A prize-collecting instance: vertices with nonnegative prizes, edges with
/// strictly positive costs, and an optional set of compulsory terminals that
/// every feasible solution must contain.
///
/// Construction validates costs, prizes, self-loops and the compulsory set,
/// collapses parallel edges to the cheapest copy, and precomputes adjacency.
/// A Graph is immutable afterwards and safe to share across threads.
/// Connectivity is not enforced by the constructor; callers that require it
/// use is_connected() or get a ConnectivityError from the operation.
class Graph {
public:
    struct Neighbor {
        VertexId to;
        EdgeId edge;
    };

    Graph(std::uint32_t vertex_count, std::vector<GraphEdge> edges,
          std::vector<double> prizes, std::vector<VertexId> compulsory = {});

    std::uint32_t vertex_count() const { return vertex_count_; }
    std::span<const GraphEdge> edges() const { return edges_; }
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
    const GraphEdge& edge(EdgeId e) const { return edges_[e]; }

    double prize(VertexId v) const { return prizes_[v]; }
    double total_prize() const { return total_prize_; }
    double total_edge_cost() const { return total_edge_cost_; }
    double max_edge_cost() const { return max_edge_cost_; }

    /// Sorted, deduplicated.
    std::span<const VertexId> compulsory() const { return compulsory_; }
    bool is_compulsory(VertexId v) const;

    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + adj_offset_[v], adj_offset_[v + 1] - adj_offset_[v]};
    }
    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(adj_offset_[v + 1] - adj_offset_[v]);
    }

    /// Edge id joining u and v, or kInvalidEdge if absent.
    EdgeId find_edge(VertexId u, VertexId v) const;

private:
    std::uint32_t vertex_count_;
    std::vector<GraphEdge> edges_;
    std::vector<double> prizes_;          // 1-based, prizes_[0] unused
    std::vector<VertexId> compulsory_;    // sorted
    std::vector<Neighbor> adjacency_;     // CSR payload
    std::vector<std::size_t> adj_offset_; // size vertex_count_ + 2
    double total_prize_ = 0.0;
    double total_edge_cost_ = 0.0;
    double max_edge_cost_ = 0.0;
};

/// A connected acyclic subgraph of a parent Graph. Vertices and edge ids are
/// kept sorted; a single vertex with no edges is a legal tree.
struct SolutionTree {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    static SolutionTree single_vertex(VertexId v) { return SolutionTree{{v}, {}}; }

    bool contains_vertex(VertexId v) const;

    /// Sorts/dedups both lists; call after building incrementally.
    void normalize();
};

/// True iff one traversal from vertex 1 reaches all vertices.
bool is_connected(const Graph& g);

/// Throws StructuralError unless t is a valid tree over g
/// (edges exist, endpoints covered, connected, acyclic, nonempty).
void validate_tree(const Graph& g, const SolutionTree& t);

/// Sum of prizes of vertices outside t plus costs of edges inside t.
/// Summation order is pinned (ascending vertices, then ascending edges) so
/// repeated evaluations are bit-identical.
double net_cost(const Graph& g, const SolutionTree& t);

/// Minimum spanning tree by Prim's algorithm, started from vertex 1.
/// Ties between candidate edges of equal cost prefer the smaller
/// (min-endpoint, max-endpoint) pair, which makes the result deterministic.
SolutionTree minimum_spanning_tree(const Graph& g);

}  // namespace pcst

#endif
