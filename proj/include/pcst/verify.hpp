#ifndef PCST_VERIFY_HPP
#define PCST_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcst/graph.hpp"
#include "pcst/tree_instance.hpp"

namespace pcst {

struct Certificate {
    double net_cost = 0.0;
    std::optional<double> lower_bound;
    std::optional<double> ratio_bound;  // net_cost / lower_bound when the bound is positive
    bool feasible = false;
    std::vector<std::string> violations;
};

/// Full feasibility check: edges exist, the subgraph is a tree, compulsory
/// terminals are covered. Findings are reported, never thrown.
Certificate validate_solution(const Graph& g, const SolutionTree& t);

/// c(t)/2 + missed prize mass: the lower bound on the optimal net-cost that
/// the primal-dual growth certifies for its own solutions.
double gw_lower_bound(const Graph& g, const SolutionTree& t);

/// Exhaustive optimum for instances with at most 18 vertices: enumerates
/// every connected vertex subset containing the compulsory terminals and
/// takes the MST of the induced subgraph. Ties resolve to the
/// lexicographically smallest vertex set.
SolutionTree exact_pcst(const Graph& g);

/// Exhaustive optimal net-weight over all nonempty connected subtrees of t
/// that contain its compulsory terminals; at most 16 vertices.
double exact_nwstpt(const TreeInstance& t);

}  // namespace pcst

#endif
