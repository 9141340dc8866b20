#include "sigq/forests.hpp"

#include <stdexcept>

namespace sigq {

std::vector<Int> forest_coefficients(const LabeledGraph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("forest_coefficients: subset sweep limited to n <= 24");
    std::vector<Edge> edges = g.edges();
    if (edges.size() > 24) throw std::invalid_argument("forest_coefficients: too many edges");

    std::vector<Int> c(n + 1, Int(0));
    std::vector<int> parent(n), size(n);
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            size[v] = 1;
        }
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        int components = n;
        for (size_t e = 0; e < edges.size() && acyclic; ++e) {
            if (!(mask >> e & 1)) continue;
            int a = find(edges[e].u), b = find(edges[e].v);
            if (a == b) {
                acyclic = false;
            } else {
                parent[a] = b;
                size[b] += size[a];
                --components;
            }
        }
        if (!acyclic) continue;
        Int gamma(1);
        for (int v = 0; v < n; ++v)
            if (find(v) == v) gamma *= size[v];
        c[components] += gamma;
    }
    return c;  // c[k] = c_{n-k}
}

Int forest_coefficient(const LabeledGraph& g, int k) {
    if (k < 1 || k > g.order()) throw std::invalid_argument("forest_coefficient: k out of range");
    return forest_coefficients(g)[k];
}

}  // namespace sigq
