#include "sigq/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sigq/canonical.hpp"
#include "sigq/matching.hpp"

namespace sigq {

std::vector<LabeledGraph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    std::vector<LabeledGraph> cur{LabeledGraph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, LabeledGraph> next;
        for (const LabeledGraph& t : cur) {
            for (int v = 0; v < t.order(); ++v) {
                LabeledGraph grown(t.order() + 1);
                for (const Edge& e : t.edges()) grown.add_edge(e.u, e.v);
                grown.add_edge(v, t.order());
                std::string key = canonical_form(grown);
                if (!next.count(key)) next.emplace(std::move(key), canonicalized(grown));
            }
        }
        cur.clear();
        for (auto& [key, t] : next) cur.push_back(std::move(t));
    }
    return cur;
}

std::vector<UnicyclicGraph> enumerate_unicyclic(int n, const EnumerateFilter& filter, int max_n) {
    if (n < 3) throw std::invalid_argument("unicyclic graphs need n >= 3");
    if (n > max_n) throw std::invalid_argument("enumeration bound exceeded");

    std::map<std::string, LabeledGraph> classes;
    for (const LabeledGraph& t : enumerate_trees(n)) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (t.has_edge(u, v)) continue;
                LabeledGraph g = t;
                g.add_edge(u, v);
                std::string key = canonical_form(g);
                if (!classes.count(key)) classes.emplace(std::move(key), canonicalized(g));
            }
        }
    }

    std::vector<UnicyclicGraph> out;
    for (auto& [key, g] : classes) {
        UnicyclicGraph ug(std::move(g));
        if (filter.girth && ug.girth() != *filter.girth) continue;
        if (filter.odd_girth && ug.odd_girth() != *filter.odd_girth) continue;
        if (filter.matching && matching_number(ug.graph()) != *filter.matching) continue;
        out.push_back(std::move(ug));
    }
    return out;
}

}  // namespace sigq
