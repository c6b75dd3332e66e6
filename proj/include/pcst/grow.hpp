#ifndef PCST_GROW_HPP
#define PCST_GROW_HPP

#include "pcst/graph.hpp"

namespace pcst {

/// A simple path that meets the current solution tree in exactly one vertex.
/// value = prize gain of the new vertices minus the cost of the path edges;
/// the root's own prize cancels out of the definition.
struct PathCandidate {
    VertexId root;
    std::vector<VertexId> new_vertices;  // in path order, none inside the tree
    std::vector<EdgeId> edges;           // |new_vertices| edges
    double value;
};

/// All candidates rooted at `root` with 1..max_len vertices outside t,
/// ordered by descending value, then lexicographic vertex sequence.
/// Throws DomainError if root is not a tree vertex.
std::vector<PathCandidate> enumerate_path_candidates(const Graph& g, const SolutionTree& t,
                                                     VertexId root, unsigned max_len);

/// Greedy growth: repeatedly attach the best non-negative-value candidate of
/// each unchecked vertex (revisiting it afterwards) until nothing qualifies.
/// Never increases net cost; the result is again a tree.
SolutionTree tga(const Graph& g, const SolutionTree& t, unsigned max_len);

}  // namespace pcst

#endif
