#include "sigq/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigq {

bool Matching::saturates(int v) const {
    for (const Edge& e : edges)
        if (e.u == v || e.v == v) return true;
    return false;
}

bool Matching::contains(Edge e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

namespace {

struct Searcher {
    const LabeledGraph& g;
    std::vector<char> used;
    std::vector<Edge> current;
    std::vector<Edge> best;

    explicit Searcher(const LabeledGraph& graph) : g(graph), used(graph.order(), 0) {}

    void run(int from) {
        int v = from;
        while (v < g.order() && used[v]) ++v;
        if (v == g.order()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // Bound: every matched pair needs two free vertices.
        int free_count = 0;
        for (int w = v; w < g.order(); ++w)
            if (!used[w]) ++free_count;
        if (current.size() + free_count / 2 <= best.size()) return;

        used[v] = 1;
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            current.emplace_back(v, w);
            run(v + 1);
            current.pop_back();
            used[w] = 0;
        }
        run(v + 1);  // leave v unmatched
        used[v] = 0;
    }
};

}  // namespace

Matching maximum_matching(const LabeledGraph& g) {
    Searcher s(g);
    // Greedy start so the bound prunes early.
    std::vector<char> taken(g.order(), 0);
    for (const Edge& e : g.edges())
        if (!taken[e.u] && !taken[e.v]) {
            taken[e.u] = taken[e.v] = 1;
            s.best.emplace_back(e.u, e.v);
        }
    s.run(0);
    Matching out{s.best};
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

int matching_number(const LabeledGraph& g) { return maximum_matching(g).size(); }

namespace {

void enumerate_matchings(const LabeledGraph& g, int from, std::vector<char>& used,
                         std::vector<Edge>& current, int target,
                         std::vector<Matching>& out) {
    int v = from;
    while (v < g.order() && used[v]) ++v;
    if (v == g.order()) {
        if (static_cast<int>(current.size()) == target) out.push_back(Matching{current});
        return;
    }
    int free_count = 0;
    for (int w = v; w < g.order(); ++w)
        if (!used[w]) ++free_count;
    if (static_cast<int>(current.size()) + free_count / 2 < target) return;

    used[v] = 1;
    for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        current.emplace_back(v, w);
        enumerate_matchings(g, v + 1, used, current, target, out);
        current.pop_back();
        used[w] = 0;
    }
    enumerate_matchings(g, v + 1, used, current, target, out);
    used[v] = 0;
}

}  // namespace

std::vector<Matching> all_maximum_matchings(const LabeledGraph& g) {
    int m = matching_number(g);
    std::vector<Matching> out;
    std::vector<char> used(g.order(), 0);
    std::vector<Edge> current;
    enumerate_matchings(g, 0, used, current, m, out);
    for (Matching& mm : out) std::sort(mm.edges.begin(), mm.edges.end());
    std::sort(out.begin(), out.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

}  // namespace sigq
