#include "sigq/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigq {

namespace {

// Backtracking minimization of the adjacency bit matrix over all vertex
// orderings consistent with the ascending degree sequence. Invariant: the
// current partial ordering always realizes the best known row prefix, so a
// candidate row strictly below the stored one truncates the best and the
// search continues tied.
struct CanonSearch {
    const LabeledGraph& g;
    int n;
    std::vector<int> target_degree;
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<std::vector<char>> best_rows;  // row k has k bits
    int best_len = 0;
    std::vector<int> best_perm;

    explicit CanonSearch(const LabeledGraph& graph) : g(graph), n(graph.order()) {
        target_degree.resize(n);
        for (int v = 0; v < n; ++v) target_degree[v] = g.degree(v);
        std::sort(target_degree.begin(), target_degree.end());
        used.assign(n, 0);
        best_rows.resize(n);
    }

    void search(int k) {
        if (k == n) {
            best_perm = perm;
            return;
        }
        std::vector<char> row(k);
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != target_degree[k]) continue;
            for (int j = 0; j < k; ++j) row[j] = g.has_edge(v, perm[j]) ? 1 : 0;
            if (best_len > k) {
                int cmp = 0;
                for (int j = 0; j < k && cmp == 0; ++j)
                    cmp = row[j] - best_rows[k][j];
                if (cmp > 0) continue;
                if (cmp < 0) {
                    best_rows[k] = row;
                    best_len = k + 1;
                }
            } else {
                best_rows[k] = row;
                best_len = k + 1;
            }
            used[v] = 1;
            perm.push_back(v);
            search(k + 1);
            perm.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const LabeledGraph& g, int max_n) {
    if (g.order() > max_n) throw std::invalid_argument("canonical form: graph too large");
    if (g.order() == 0) return {};
    CanonSearch s(g);
    s.search(0);
    return s.best_perm;
}

std::string canonical_form(const LabeledGraph& g, int max_n) {
    std::vector<int> order = canonical_order(g, max_n);
    std::ostringstream os;
    os << "n" << g.order() << ":d";
    std::vector<int> degs(g.order());
    for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    for (int d : degs) os << d << ",";
    os << ":";
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < i; ++j) os << (g.has_edge(order[i], order[j]) ? '1' : '0');
    return os.str();
}

LabeledGraph canonicalized(const LabeledGraph& g, int max_n) {
    std::vector<int> order = canonical_order(g, max_n);
    std::vector<int> new_id(g.order());
    for (int pos = 0; pos < g.order(); ++pos) new_id[order[pos]] = pos;
    return g.relabeled(new_id);
}

}  // namespace sigq
