#include "sigq/tu.hpp"

#include <stdexcept>

namespace sigq {

namespace {

// Weight of the spanning subgraph given by the edge subset, or 0 when some
// component is neither a tree nor odd-unicyclic.
Int subset_weight(const LabeledGraph& g, const std::vector<Edge>& edges, unsigned mask) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!(mask >> e & 1)) continue;
        adj[edges[e].u].push_back(edges[e].v);
        adj[edges[e].v].push_back(edges[e].u);
    }
    std::vector<int> color(n, -1);  // 2-coloring per component
    Int weight(1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        // BFS: component size, edge count, bipartiteness.
        std::vector<int> queue{s};
        color[s] = 0;
        int vc = 0, ec2 = 0;
        bool bipartite = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            ++vc;
            for (int w : adj[v]) {
                ++ec2;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
        int ec = ec2 / 2;
        if (ec == vc - 1) {
            weight *= vc;  // tree (an isolated vertex contributes factor 1)
        } else if (ec == vc && !bipartite) {
            weight *= 4;  // odd-unicyclic
        } else {
            return Int(0);
        }
    }
    return weight;
}

}  // namespace

std::vector<Int> tu_coefficients(const UnicyclicGraph& ug) {
    const LabeledGraph& g = ug.graph();
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("tu_coefficients: subset sweep limited to n <= 24");
    std::vector<Edge> edges = g.edges();
    std::vector<Int> phi(n + 1, Int(0));
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        Int w = subset_weight(g, edges, mask);
        if (w != 0) phi[__builtin_popcount(mask)] += w;
    }
    return phi;
}

Int tu_coefficient(const UnicyclicGraph& g, int i) {
    if (i < 0 || i > g.order()) throw std::invalid_argument("tu_coefficient: index out of range");
    return tu_coefficients(g)[i];
}

}  // namespace sigq
