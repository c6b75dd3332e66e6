#include "pcst/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace pcst {

Certificate validate_solution(const Graph& g, const SolutionTree& t) {
    Certificate cert;
    auto flag = [&](std::string msg) { cert.violations.push_back(std::move(msg)); };

    std::vector<VertexId> vertices = t.vertices;
    std::sort(vertices.begin(), vertices.end());
    if (vertices.empty()) {
        flag("solution has no vertices");
        return cert;
    }
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        flag("duplicate vertex in solution");
    bool ids_ok = true;
    for (VertexId v : vertices)
        if (v < 1 || v > g.vertex_count()) {
            flag("vertex " + std::to_string(v) + " out of range");
            ids_ok = false;
        }
    bool edges_ok = true;
    for (EdgeId e : t.edges)
        if (e >= g.edge_count()) {
            flag("edge id " + std::to_string(e) + " does not exist in the instance");
            edges_ok = false;
        }
    if (!ids_ok || !edges_ok) return cert;

    auto has_vertex = [&](VertexId v) {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    };
    for (EdgeId e : t.edges)
        if (!has_vertex(g.edge(e).u) || !has_vertex(g.edge(e).v))
            flag("edge " + std::to_string(e) + " has an endpoint outside the vertex set");

    if (t.edges.size() + 1 != vertices.size())
        flag(t.edges.size() >= vertices.size() ? "solution contains a cycle"
                                               : "solution is disconnected (too few edges)");

    // connectivity over the selected edges
    {
        std::vector<VertexId> stack;
        std::vector<char> seen(g.vertex_count() + 1, 0);
        std::vector<char> edge_in(g.edge_count(), 0);
        for (EdgeId e : t.edges) edge_in[e] = 1;
        seen[vertices.front()] = 1;
        stack.push_back(vertices.front());
        std::size_t reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Graph::Neighbor& n : g.neighbors(v)) {
                if (edge_in[n.edge] && !seen[n.to] && has_vertex(n.to)) {
                    seen[n.to] = 1;
                    ++reached;
                    stack.push_back(n.to);
                }
            }
        }
        if (reached != vertices.size()) flag("solution is disconnected");
    }

    for (VertexId c : g.compulsory())
        if (!has_vertex(c)) flag("compulsory terminal " + std::to_string(c) + " missing");

    double inside = 0.0;
    for (VertexId v : vertices) inside += g.prize(v);
    double cost = 0.0;
    for (EdgeId e : t.edges) cost += g.edge(e).cost;
    cert.net_cost = (g.total_prize() - inside) + cost;
    cert.feasible = cert.violations.empty();
    return cert;
}

double gw_lower_bound(const Graph& g, const SolutionTree& t) {
    double cost = 0.0;
    for (EdgeId e : t.edges) cost += g.edge(e).cost;
    double inside = 0.0;
    for (VertexId v : t.vertices) inside += g.prize(v);
    return cost / 2.0 + (g.total_prize() - inside);
}

namespace {

/// Prim restricted to a vertex mask; n <= 18 so quadratic scans are fine.
/// Same (cost, min-endpoint, max-endpoint) tie rule as the full-graph MST.
double masked_mst(const Graph& g, std::uint32_t mask, const std::vector<VertexId>& verts,
                  std::vector<EdgeId>* out_edges) {
    const std::size_t k = verts.size();
    out_edges->clear();
    if (k == 1) return 0.0;
    std::uint32_t in_tree = 1u << (verts[0] - 1);
    double total = 0.0;
    for (std::size_t round = 1; round < k; ++round) {
        double best_cost = std::numeric_limits<double>::infinity();
        VertexId best_lo = 0, best_hi = 0;
        EdgeId best_edge = kInvalidEdge;
        VertexId best_attach = 0;
        for (VertexId v : verts) {
            if (!(in_tree >> (v - 1) & 1u)) continue;
            for (const Graph::Neighbor& n : g.neighbors(v)) {
                if ((in_tree >> (n.to - 1) & 1u) || !(mask >> (n.to - 1) & 1u)) continue;
                const GraphEdge& e = g.edge(n.edge);
                if (e.cost < best_cost ||
                    (e.cost == best_cost &&
                     (e.u < best_lo || (e.u == best_lo && e.v < best_hi)))) {
                    best_cost = e.cost;
                    best_lo = e.u;
                    best_hi = e.v;
                    best_edge = n.edge;
                    best_attach = n.to;
                }
            }
        }
        if (best_edge == kInvalidEdge) return std::numeric_limits<double>::infinity();
        in_tree |= 1u << (best_attach - 1);
        out_edges->push_back(best_edge);
        total += best_cost;
    }
    return total;
}

bool mask_connected(const std::vector<std::uint32_t>& adj_mask, std::uint32_t mask) {
    std::uint32_t start = mask & (~mask + 1);  // lowest set bit
    std::uint32_t seen = start;
    std::uint32_t frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int b = std::countr_zero(f);
            f &= f - 1;
            next |= adj_mask[static_cast<std::size_t>(b)] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

}  // namespace

SolutionTree exact_pcst(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 18) throw DomainError("exact_pcst is limited to 18 vertices");

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const GraphEdge& e : g.edges()) {
        adj_mask[e.u - 1] |= 1u << (e.v - 1);
        adj_mask[e.v - 1] |= 1u << (e.u - 1);
    }
    std::uint32_t required = 0;
    for (VertexId c : g.compulsory()) required |= 1u << (c - 1);

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<VertexId> best_verts;
    std::vector<EdgeId> best_edges;
    std::vector<VertexId> verts;
    std::vector<EdgeId> mst_edges;

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if ((mask & required) != required) continue;
        if (!mask_connected(adj_mask, mask)) continue;
        verts.clear();
        std::uint32_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            verts.push_back(static_cast<VertexId>(b + 1));
        }
        double mst_cost = masked_mst(g, mask, verts, &mst_edges);
        double inside = 0.0;
        for (VertexId v : verts) inside += g.prize(v);
        double value = (g.total_prize() - inside) + mst_cost;
        bool better = value < best_value;
        if (!better && value == best_value)
            better = std::lexicographical_compare(verts.begin(), verts.end(),
                                                  best_verts.begin(), best_verts.end());
        if (better) {
            best_value = value;
            best_verts = verts;
            best_edges = mst_edges;
        }
    }
    if (best_verts.empty()) throw ConnectivityError("no connected subset covers the terminals");

    SolutionTree out;
    out.vertices = std::move(best_verts);
    out.edges = std::move(best_edges);
    out.normalize();
    return out;
}

double exact_nwstpt(const TreeInstance& t) {
    const std::uint32_t n = t.vertex_count();
    if (n > 16) throw DomainError("exact_nwstpt is limited to 16 vertices");

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const TreeEdge& e : t.edges()) {
        adj_mask[e.u - 1] |= 1u << (e.v - 1);
        adj_mask[e.v - 1] |= 1u << (e.u - 1);
    }
    std::uint32_t required = 0;
    for (std::uint32_t c : t.compulsory()) required |= 1u << (c - 1);

    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if ((mask & required) != required) continue;
        if (!mask_connected(adj_mask, mask)) continue;
        double value = 0.0;
        std::uint32_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            value += t.weight(static_cast<std::uint32_t>(b + 1));
        }
        for (const TreeEdge& e : t.edges())
            if ((mask >> (e.u - 1) & 1u) && (mask >> (e.v - 1) & 1u)) value -= e.cost;
        best = std::max(best, value);
    }
    return best;
}

}  // namespace pcst
