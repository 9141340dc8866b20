#include "sigq/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sigq {

LabeledGraph::LabeledGraph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    adj_.resize(n);
}

void LabeledGraph::check_vertex(int v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
}

void LabeledGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void LabeledGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edge_count_;
}

bool LabeledGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& LabeledGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int LabeledGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool LabeledGraph::is_connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == order();
}

bool LabeledGraph::is_bipartite() const {
    std::vector<int> color(order(), -1);
    for (int s = 0; s < order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

LabeledGraph LabeledGraph::relabeled(const std::vector<int>& new_id) const {
    if (static_cast<int>(new_id.size()) != order())
        throw std::invalid_argument("relabeling size mismatch");
    LabeledGraph out(order());
    for (const Edge& e : edges()) out.add_edge(new_id[e.u], new_id[e.v]);
    return out;
}

std::vector<int> find_cycle(const LabeledGraph& g) {
    if (g.order() < 3) throw std::invalid_argument("unicyclic graph needs n >= 3");
    if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
    if (g.edge_count() != g.order())
        throw std::invalid_argument("unicyclic graph requires |E| = |V|");

    // Peel leaves; what remains is exactly the cycle.
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::vector<int> stack;
    for (int v = 0; v < g.order(); ++v)
        if (deg[v] == 1) stack.push_back(v);
    std::vector<char> removed(g.order(), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        removed[v] = 1;
        for (int w : g.neighbors(v))
            if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }

    int start = -1;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    if (start < 0) throw std::invalid_argument("no cycle found");

    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (removed[w] || w == prev) continue;
            if (next == -1 || w < next) next = w;
        }
        if (next == -1) throw std::invalid_argument("cycle extraction failed");
        if (next != start) cycle.push_back(next);
        prev = cur;
        cur = next;
    } while (cur != start);
    return cycle;
}

UnicyclicGraph::UnicyclicGraph(LabeledGraph g) : g_(std::move(g)) {
    cycle_ = find_cycle(g_);
    cycle_pos_.assign(g_.order(), -1);
    for (size_t i = 0; i < cycle_.size(); ++i) cycle_pos_[cycle_[i]] = static_cast<int>(i);

    dist_.assign(g_.order(), -1);
    std::queue<int> q;
    for (int v : cycle_) {
        dist_[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g_.neighbors(v))
            if (dist_[w] == -1) {
                dist_[w] = dist_[v] + 1;
                q.push(w);
            }
    }
}

bool UnicyclicGraph::on_cycle(int v) const { return cycle_pos_.at(v) >= 0; }

bool UnicyclicGraph::is_cycle_edge(int u, int v) const {
    if (!on_cycle(u) || !on_cycle(v)) return false;
    int g = girth();
    int d = (cycle_pos_.at(u) - cycle_pos_.at(v) + g) % g;
    return (d == 1 || d == g - 1) && g_.has_edge(u, v);
}

int UnicyclicGraph::dist_to_cycle(int v) const { return dist_.at(v); }

int UnicyclicGraph::cycle_index(int v) const { return cycle_pos_.at(v); }

std::vector<Edge> incident_edges_excluding(const LabeledGraph& g, int u, Edge uv) {
    if (uv.u != u && uv.v != u) throw std::invalid_argument("u is not an endpoint of uv");
    if (!g.has_edge(uv.u, uv.v)) throw std::invalid_argument("uv is not an edge");
    int other = (uv.u == u) ? uv.v : uv.u;
    std::vector<Edge> out;
    for (int w : g.neighbors(u))
        if (w != other) out.emplace_back(u, w);
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph read_edge_list(std::istream& in) {
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    LabeledGraph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

void write_edge_list(const LabeledGraph& g, std::ostream& out) {
    out << g.order() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string edge_list_string(const LabeledGraph& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

}  // namespace sigq
