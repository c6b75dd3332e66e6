#include "pcst/prune.hpp"

#include <algorithm>
#include <limits>

namespace pcst {

namespace {

constexpr std::uint32_t kNone = 0;

/// Shared peeling state for one sweep.
struct Sweep {
    std::vector<double> nw;
    std::vector<std::uint32_t> xi;   // unprocessed-neighbor count
    std::vector<char> processed;
    std::vector<std::uint32_t> frontier, next_frontier;
    std::uint32_t unprocessed = 0;

    explicit Sweep(const TreeInstance& t)
        : nw(t.vertex_count() + 1, 0.0),
          xi(t.vertex_count() + 1, 0),
          processed(t.vertex_count() + 1, 0),
          unprocessed(t.vertex_count()) {
        for (std::uint32_t v = 1; v <= t.vertex_count(); ++v)
            xi[v] = static_cast<std::uint32_t>(t.neighbors(v).size());
    }

    void seed_frontier(const TreeInstance& t, std::uint32_t skip = kNone) {
        frontier.clear();
        for (std::uint32_t v = 1; v <= t.vertex_count(); ++v)
            if (v != skip && xi[v] == 1) frontier.push_back(v);
        // ascending ids already, vertices scanned in order
    }
};

}  // namespace

PseudoRootResult select_pseudo_root(const TreeInstance& t) {
    Sweep s(t);
    for (std::uint32_t v = 1; v <= t.vertex_count(); ++v) s.nw[v] = t.weight(v);

    s.seed_frontier(t);
    while (s.unprocessed > 1 && !s.frontier.empty()) {
        s.next_frontier.clear();
        for (std::uint32_t i : s.frontier) {
            if (s.unprocessed == 1) break;
            if (s.processed[i] || s.xi[i] != 1) continue;
            std::uint32_t j = kNone;
            double cost = 0.0;
            for (const TreeInstance::Neighbor& n : t.neighbors(i))
                if (!s.processed[n.to]) {
                    j = n.to;
                    cost = t.edges()[n.edge].cost;
                    break;
                }
            if (cost < s.nw[i]) s.nw[j] += s.nw[i] - cost;
            s.processed[i] = 1;
            --s.unprocessed;
            if (--s.xi[j] == 1 && !s.processed[j]) s.next_frontier.push_back(j);
        }
        std::sort(s.next_frontier.begin(), s.next_frontier.end());
        s.frontier.swap(s.next_frontier);
    }

    PseudoRootResult best{0, -std::numeric_limits<double>::infinity()};
    for (std::uint32_t v = 1; v <= t.vertex_count(); ++v) {
        if (s.nw[v] > best.net_weight) best = {v, s.nw[v]};
    }
    return best;
}

namespace {

/// Second sweep: peel all non-root vertices; cut the branch when its
/// accumulated value is strictly below the connecting cost, otherwise fold it
/// into the parent. Returns the surviving subtree.
Subtree prune_from_root(const TreeInstance& t, std::uint32_t root,
                        const std::vector<char>& is_compulsory, double compulsory_nw) {
    Sweep s(t);
    for (std::uint32_t v = 1; v <= t.vertex_count(); ++v)
        s.nw[v] = is_compulsory[v] ? compulsory_nw : t.weight(v);

    const std::uint32_t n = t.vertex_count();
    std::vector<std::uint32_t> parent(n + 1, kNone);
    std::vector<std::uint32_t> parent_edge(n + 1, kNone);
    std::vector<char> cut(n + 1, 0);
    std::vector<std::uint32_t> order;  // processing order, leaves first
    order.reserve(n);

    s.seed_frontier(t, root);
    while (s.unprocessed > 1 && !s.frontier.empty()) {
        s.next_frontier.clear();
        for (std::uint32_t i : s.frontier) {
            if (s.unprocessed == 1) break;
            if (i == root || s.processed[i] || s.xi[i] != 1) continue;
            std::uint32_t j = kNone, edge = kNone;
            for (const TreeInstance::Neighbor& nb : t.neighbors(i))
                if (!s.processed[nb.to]) {
                    j = nb.to;
                    edge = nb.edge;
                    break;
                }
            double cost = t.edges()[edge].cost;
            if (s.nw[i] < cost) {
                cut[i] = 1;  // drops i and everything already folded under it
            } else {
                s.nw[j] += s.nw[i] - cost;
            }
            parent[i] = j;
            parent_edge[i] = edge;
            order.push_back(i);
            s.processed[i] = 1;
            --s.unprocessed;
            if (--s.xi[j] == 1 && !s.processed[j] && j != root) s.next_frontier.push_back(j);
        }
        std::sort(s.next_frontier.begin(), s.next_frontier.end());
        s.frontier.swap(s.next_frontier);
    }

    // a vertex survives iff it is not cut and its parent survives
    std::vector<char> survive(n + 1, 0);
    survive[root] = 1;
    Subtree out;
    out.vertices.push_back(root);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::uint32_t i = *it;
        if (!cut[i] && survive[parent[i]]) {
            survive[i] = 1;
            out.vertices.push_back(i);
            out.edges.push_back(parent_edge[i]);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace

Subtree gpra(const TreeInstance& t) {
    std::vector<char> is_compulsory(t.vertex_count() + 1, 0);
    std::uint32_t root = kNone;
    if (t.compulsory().empty()) {
        root = select_pseudo_root(t).vertex;
        is_compulsory[root] = 1;
    } else {
        for (std::uint32_t c : t.compulsory()) is_compulsory[c] = 1;
        root = t.compulsory().front();  // lowest id, deterministic
    }
    return prune_from_root(t, root, is_compulsory, t.sentinel());
}

Subtree strong_prune(const TreeInstance& t, std::uint32_t root) {
    if (root < 1 || root > t.vertex_count()) throw DomainError("strong_prune: root not in tree");
    std::vector<char> none(t.vertex_count() + 1, 0);
    return prune_from_root(t, root, none, 0.0);
}

SolutionTree gpra_solution(const Graph& g, const SolutionTree& t) {
    TreeInstance inst = TreeInstance::from_solution(g, t);
    return to_solution(inst, gpra(inst));
}

}  // namespace pcst
