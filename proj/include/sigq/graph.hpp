#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigq {

struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    // All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_bipartite() const;

    // Graph with the same edges under vertex relabeling new_id[v_old] = v_new.
    LabeledGraph relabeled(const std::vector<int>& new_id) const;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Connected graph with |E| = |V| and its unique cycle, stored in a
// deterministic rotation (smallest vertex first, then its smaller neighbor).
class UnicyclicGraph {
public:
    explicit UnicyclicGraph(LabeledGraph g);

    const LabeledGraph& graph() const { return g_; }
    int order() const { return g_.order(); }
    const std::vector<int>& cycle() const { return cycle_; }
    int girth() const { return static_cast<int>(cycle_.size()); }
    bool odd_girth() const { return girth() % 2 == 1; }

    bool on_cycle(int v) const;
    bool is_cycle_edge(int u, int v) const;
    int dist_to_cycle(int v) const;

    // Index in cycle() of a cycle vertex, -1 otherwise.
    int cycle_index(int v) const;

private:
    LabeledGraph g_;
    std::vector<int> cycle_;
    std::vector<int> dist_;
    std::vector<int> cycle_pos_;
};

// The unique cycle of a graph satisfying the unicyclic invariants;
// throws std::invalid_argument when the input is not connected or |E| != |V|.
std::vector<int> find_cycle(const LabeledGraph& g);

// All edges incident to u except uv; throws when uv is not an edge at u.
std::vector<Edge> incident_edges_excluding(const LabeledGraph& g, int u, Edge uv);

// Edge-list text format: first line n, then one "u v" pair per line, 0-based.
LabeledGraph read_edge_list(std::istream& in);
void write_edge_list(const LabeledGraph& g, std::ostream& out);
std::string edge_list_string(const LabeledGraph& g);

}  // namespace sigq
