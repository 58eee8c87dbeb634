#pragma once

// Seifert circles of the oriented resolution, the signed Seifert graph and
// the auxiliary graph whose first Betti number measures the error term.

#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "union_find.hpp"

namespace slicebound {

struct SeifertCircles {
    std::vector<int> circle_of_edge;
    int count = 0;
};

struct SignedEdge {
    int u = 0;  // circle through the under-strand
    int v = 0;  // circle through the over-strand
    int sign = 1;
    int crossing = 0;
};

struct SeifertGraph {
    int node_count = 0;
    std::vector<SignedEdge> edges;
};

/// One node per component of T-(D), then one per component of T+(D); one
/// edge per Seifert circle joining the two components that contain it.
struct AuxGraph {
    int minus_components = 0;
    int plus_components = 0;
    std::vector<std::pair<int, int>> edges;

    int node_count() const { return minus_components + plus_components; }
};

/// Smooths every crossing along the orientation: the incoming under-edge
/// continues into the outgoing over-edge and vice versa. Circle ids are
/// ordered by the smallest edge id they contain.
inline SeifertCircles oriented_resolution(const Diagram& d) {
    UnionFind uf(d.edge_count());
    for (const Crossing& c : d.crossings()) {
        uf.unite(c.in_under(), c.out_over());
        uf.unite(c.in_over(), c.out_under());
    }
    SeifertCircles circles;
    circles.circle_of_edge = uf.labels();
    circles.count = uf.set_count();
    for (std::size_t k = 0; k < d.crossings().size(); ++k) {
        const Crossing& c = d.crossings()[k];
        if (circles.circle_of_edge[c.in_under()] == circles.circle_of_edge[c.in_over()])
            throw ConsistencyError("oriented smoothing of crossing " + std::to_string(k) +
                                   " joins a circle to itself; orientation data is invalid");
    }
    return circles;
}

inline SeifertGraph seifert_graph(const Diagram& d, const SeifertCircles& circles) {
    SeifertGraph g;
    g.node_count = circles.count;
    for (std::size_t k = 0; k < d.crossings().size(); ++k) {
        const Crossing& c = d.crossings()[k];
        g.edges.push_back({circles.circle_of_edge[c.in_under()], circles.circle_of_edge[c.in_over()], c.sign,
                           static_cast<int>(k)});
    }
    return g;
}

inline SeifertGraph seifert_graph(const Diagram& d) { return seifert_graph(d, oriented_resolution(d)); }

namespace detail {

inline UnionFind signed_subgraph(const SeifertGraph& g, int keep_sign) {
    UnionFind uf(g.node_count);
    for (const SignedEdge& e : g.edges)
        if (e.sign == keep_sign) uf.unite(e.u, e.v);
    return uf;
}

}  // namespace detail

/// Components of T+(D) (keep_sign = +1) or T-(D) (keep_sign = -1).
inline int component_count(const SeifertGraph& g, int keep_sign) {
    return detail::signed_subgraph(g, keep_sign).set_count();
}

inline AuxGraph aux_graph(const SeifertGraph& g, const SeifertCircles& circles) {
    if (g.node_count != circles.count) throw DomainError("Seifert graph and circles come from different diagrams");
    auto minus = detail::signed_subgraph(g, -1);
    auto plus = detail::signed_subgraph(g, 1);
    const auto minus_label = minus.labels();
    const auto plus_label = plus.labels();
    AuxGraph aux;
    aux.minus_components = minus.set_count();
    aux.plus_components = plus.set_count();
    for (int c = 0; c < circles.count; ++c)
        aux.edges.push_back({minus_label[c], aux.minus_components + plus_label[c]});
    return aux;
}

/// b1 of each connected component of G, in order of smallest node.
inline std::vector<int> betti1_by_component(const AuxGraph& g) {
    UnionFind uf(g.node_count());
    for (auto [a, b] : g.edges) uf.unite(a, b);
    const auto label = uf.labels();
    std::vector<int> nodes(uf.set_count(), 0), edges(uf.set_count(), 0);
    for (int v = 0; v < g.node_count(); ++v) ++nodes[label[v]];
    for (auto [a, b] : g.edges) ++edges[label[a]];
    std::vector<int> out;
    for (int i = 0; i < uf.set_count(); ++i) out.push_back(1 - nodes[i] + edges[i]);
    return out;
}

/// First Betti number 1 - #nodes + #edges of a connected G.
inline int betti1(const AuxGraph& g) {
    const auto parts = betti1_by_component(g);
    if (parts.size() != 1)
        throw DomainError("auxiliary graph has " + std::to_string(parts.size()) +
                          " components (split diagram); use betti1_by_component");
    return parts.front();
}

/// Proper 2-colouring of the Seifert graph (0/1 per circle), or nullopt if
/// the graph has an odd cycle. Each connected component is coloured
/// starting from colour 0 at its smallest circle.
inline std::optional<std::vector<int>> two_coloring(const SeifertGraph& g) {
    std::vector<std::vector<int>> adj(g.node_count);
    for (const SignedEdge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> color(g.node_count, -1);
    for (int start = 0; start < g.node_count; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace slicebound
