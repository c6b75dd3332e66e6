#ifndef PCST_PRUNE_HPP
#define PCST_PRUNE_HPP

#include "pcst/tree_instance.hpp"

namespace pcst {

struct PseudoRootResult {
    std::uint32_t vertex;
    double net_weight;  // equals the optimal unconstrained net-weight of t
};

/// First sweep of the pruning algorithm for instances without compulsory
/// terminals: peel degree-1 vertices, accumulating child net-weight into the
/// parent whenever it exceeds the connecting cost, and return the vertex with
/// the largest accumulated value (ties to the lowest id).
PseudoRootResult select_pseudo_root(const TreeInstance& t);

/// Optimal pruning: returns the maximum-net-weight subtree of t containing
/// all compulsory terminals. With no terminals the pseudo-root sweep first
/// picks one. Linear in |V|.
Subtree gpra(const TreeInstance& t);

/// Single-root baseline (Johnson-style strong pruning): optimal subtree of t
/// containing the given root; compulsory terminals are ignored.
Subtree strong_prune(const TreeInstance& t, std::uint32_t root);

/// Convenience composition for solution trees: view t as a pruning instance
/// over g's prizes and compulsory set, prune, map back.
SolutionTree gpra_solution(const Graph& g, const SolutionTree& t);

}  // namespace pcst

#endif
