#include "pcst/grow.hpp"

#include <algorithm>
#include <set>

namespace pcst {

namespace {

/// Depth-first walk over all simple paths leaving `root` through non-tree
/// vertices, at most max_len of them; fn sees every prefix as a candidate.
template <typename Fn>
void walk_candidates(const Graph& g, const std::vector<char>& in_tree, VertexId root,
                     unsigned max_len, Fn&& fn) {
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::vector<char> on_path(g.vertex_count() + 1, 0);
    double value = 0.0;

    struct Frame {
        VertexId at;
        std::size_t next;  // index into neighbors(at)
    };
    std::vector<Frame> stack;
    stack.push_back({root, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.at);
        if (f.next < nbrs.size() && path.size() < max_len) {
            const Graph::Neighbor n = nbrs[f.next++];
            if (in_tree[n.to] || on_path[n.to]) continue;
            path.push_back(n.to);
            path_edges.push_back(n.edge);
            on_path[n.to] = 1;
            value += g.prize(n.to) - g.edge(n.edge).cost;
            fn(path, path_edges, value);
            stack.push_back({n.to, 0});
        } else {
            stack.pop_back();
            if (!path.empty()) {
                value -= g.prize(path.back()) - g.edge(path_edges.back()).cost;
                on_path[path.back()] = 0;
                path.pop_back();
                path_edges.pop_back();
            }
        }
    }
}

bool better_candidate(double value, const std::vector<VertexId>& seq, const PathCandidate& cur) {
    if (value != cur.value) return value > cur.value;
    return std::lexicographical_compare(seq.begin(), seq.end(), cur.new_vertices.begin(),
                                        cur.new_vertices.end());
}

std::vector<char> tree_membership(const Graph& g, const SolutionTree& t) {
    std::vector<char> in_tree(g.vertex_count() + 1, 0);
    for (VertexId v : t.vertices) in_tree[v] = 1;
    return in_tree;
}

}  // namespace

std::vector<PathCandidate> enumerate_path_candidates(const Graph& g, const SolutionTree& t,
                                                     VertexId root, unsigned max_len) {
    validate_tree(g, t);
    if (max_len < 1) throw DomainError("path length bound must be at least 1");
    if (!t.contains_vertex(root)) throw DomainError("candidate root is not a tree vertex");

    std::vector<char> in_tree = tree_membership(g, t);
    std::vector<PathCandidate> out;
    walk_candidates(g, in_tree, root, max_len,
                    [&](const std::vector<VertexId>& path, const std::vector<EdgeId>& edges,
                        double value) {
                        out.push_back(PathCandidate{root, path, edges, value});
                    });
    std::sort(out.begin(), out.end(), [](const PathCandidate& a, const PathCandidate& b) {
        if (a.value != b.value) return a.value > b.value;
        return std::lexicographical_compare(a.new_vertices.begin(), a.new_vertices.end(),
                                            b.new_vertices.begin(), b.new_vertices.end());
    });
    return out;
}

SolutionTree tga(const Graph& g, const SolutionTree& t, unsigned max_len) {
    validate_tree(g, t);
    if (max_len < 1) throw DomainError("path length bound must be at least 1");

    std::vector<char> in_tree = tree_membership(g, t);
    SolutionTree grown = t;
    std::set<VertexId> unchecked(t.vertices.begin(), t.vertices.end());

    VertexId scan_from = 0;
    while (!unchecked.empty()) {
        auto it = unchecked.lower_bound(scan_from);
        if (it == unchecked.end()) it = unchecked.begin();  // wrap the round-robin
        const VertexId i = *it;

        PathCandidate best;
        bool found = false;
        walk_candidates(g, in_tree, i, max_len,
                        [&](const std::vector<VertexId>& path, const std::vector<EdgeId>& edges,
                            double value) {
                            if (value < 0.0) return;
                            if (!found || better_candidate(value, path, best)) {
                                best = PathCandidate{i, path, edges, value};
                                found = true;
                            }
                        });
        if (found) {
            for (VertexId v : best.new_vertices) {
                in_tree[v] = 1;
                grown.vertices.push_back(v);
                unchecked.insert(v);  // new vertices start unchecked; i stays unchecked
            }
            grown.edges.insert(grown.edges.end(), best.edges.begin(), best.edges.end());
        } else {
            unchecked.erase(it);
        }
        scan_from = i + 1;
    }
    grown.normalize();
    return grown;
}

}  // namespace pcst
