#ifndef PCST_TREE_INSTANCE_HPP
#define PCST_TREE_INSTANCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pcst/graph.hpp"

namespace pcst {

/// One edge of a tree instance. Endpoints are local 1-based ids;
/// graph_edge remembers the parent-graph edge when the instance was
/// derived from a SolutionTree (kInvalidEdge for standalone instances).
struct TreeEdge {
    std::uint32_t u;
    std::uint32_t v;
    double cost;
    EdgeId graph_edge = kInvalidEdge;
};

/// A node-weighted tree: the input of the pruning algorithms. Unlike Graph,
/// node weights may be any real value and there is no connectivity freedom —
/// construction rejects anything that is not a single tree.
///
/// Local vertex ids run 1..vertex_count(). When built from a SolutionTree the
/// locals are assigned in ascending parent-id order, so "lowest id" tie rules
/// agree between the two id spaces.
class TreeInstance {
public:
    /// Weights are indexed 1..n (weights.size() == n). Throws StructuralError
    /// if the edges do not form a tree on those vertices.
    static TreeInstance standalone(std::vector<double> weights, std::vector<TreeEdge> edges,
                                   std::vector<std::uint32_t> compulsory = {});

    /// View a solution tree as a pruning instance: weights are the prizes,
    /// compulsory terminals are the graph's (all must lie inside t).
    static TreeInstance from_solution(const Graph& g, const SolutionTree& t);

    std::uint32_t vertex_count() const { return vertex_count_; }
    double weight(std::uint32_t v) const { return weights_[v]; }
    std::span<const TreeEdge> edges() const { return edges_; }
    std::span<const std::uint32_t> compulsory() const { return compulsory_; }

    struct Neighbor {
        std::uint32_t to;
        std::uint32_t edge;  // index into edges()
    };
    std::span<const Neighbor> neighbors(std::uint32_t v) const {
        return {adjacency_.data() + adj_offset_[v], adj_offset_[v + 1] - adj_offset_[v]};
    }

    /// Parent-graph vertex for a local id (identity for standalone instances).
    VertexId parent_vertex(std::uint32_t v) const { return parent_vertex_[v]; }

    /// Sentinel B = sum of |costs| + sum of |weights|; large enough that a
    /// compulsory terminal initialized to it can never be pruned away.
    double sentinel() const { return sentinel_; }

private:
    TreeInstance() = default;
    void build_adjacency();

    std::uint32_t vertex_count_ = 0;
    std::vector<double> weights_;             // 1-based
    std::vector<TreeEdge> edges_;
    std::vector<std::uint32_t> compulsory_;   // sorted local ids
    std::vector<VertexId> parent_vertex_;     // 1-based
    std::vector<Neighbor> adjacency_;
    std::vector<std::size_t> adj_offset_;
    double sentinel_ = 0.0;
};

/// A subtree selection within a TreeInstance: sorted local vertex ids plus
/// sorted indices into TreeInstance::edges().
struct Subtree {
    std::vector<std::uint32_t> vertices;
    std::vector<std::uint32_t> edges;
};

/// Throws StructuralError unless sel is a nonempty connected subtree of t.
void validate_subtree(const TreeInstance& t, const Subtree& sel);

/// Included weights minus included edge costs. For a selection of the whole
/// tree T this and the tree-as-instance net cost sum to the total weight.
double net_weight(const TreeInstance& t, const Subtree& sel);

/// Map a subtree of an instance derived via from_solution back to a
/// SolutionTree over the parent graph.
SolutionTree to_solution(const TreeInstance& t, const Subtree& sel);

}  // namespace pcst

#endif
