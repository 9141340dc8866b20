#include "sigq/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigq {

namespace {

TransformOutcome make_outcome(const LabeledGraph& before, LabeledGraph after) {
    if (after.order() != before.order())
        throw std::runtime_error("transform changed the graph order");
    TransformOutcome out{std::move(after), matching_number(before), 0};
    out.matching_after = matching_number(out.result);
    return out;
}

// Compaction map that drops the listed vertices; dropped slots are reused by
// new vertices appended at the end.
std::vector<int> compact_map(int n, std::vector<int> dropped) {
    std::sort(dropped.begin(), dropped.end());
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (std::binary_search(dropped.begin(), dropped.end(), v)) continue;
        map[v] = next++;
    }
    return map;
}

int pendant_edge_count(const UnicyclicGraph& g, int cycle_vertex) {
    int t = 0;
    for (int w : g.graph().neighbors(cycle_vertex))
        if (g.graph().degree(w) == 1) ++t;
    return t;
}

}  // namespace

TransformOutcome contract_add_pendant(const UnicyclicGraph& ug, Edge uv) {
    const LabeledGraph& g = ug.graph();
    if (!g.has_edge(uv.u, uv.v)) throw std::invalid_argument("contract_add_pendant: not an edge");
    if (ug.is_cycle_edge(uv.u, uv.v))
        throw std::invalid_argument("contract_add_pendant: edge lies on the cycle");
    if (g.degree(uv.u) < 2 || g.degree(uv.v) < 2)
        throw std::invalid_argument("contract_add_pendant: pendant edge");

    const int n = g.order();
    const int lo = uv.u, hi = uv.v;
    std::vector<int> map = compact_map(n, {hi});
    LabeledGraph out(n);
    for (const Edge& e : g.edges()) {
        if (e == uv) continue;
        int a = (e.u == hi) ? lo : e.u;
        int b = (e.v == hi) ? lo : e.v;
        out.add_edge(map[a], map[b]);
    }
    out.add_edge(map[lo], n - 1);  // the new pendant vertex
    UnicyclicGraph check(out);  // validates the unicyclic invariants
    (void)check;
    return make_outcome(g, std::move(out));
}

TransformOutcome sigma_transform(const LabeledGraph& g, int v, int u) {
    if (!g.has_edge(v, u)) throw std::invalid_argument("sigma_transform: u not adjacent to v");
    std::vector<int> moved;
    for (int x : g.neighbors(v)) {
        if (x == u) continue;
        if (g.degree(x) != 1)
            throw std::invalid_argument("sigma_transform: v has a non-pendant neighbor besides u");
        moved.push_back(x);
    }
    if (moved.empty()) throw std::invalid_argument("sigma_transform: no pendant neighbors at v");

    LabeledGraph out = g;
    for (int x : moved) {
        out.remove_edge(v, x);
        out.add_edge(u, x);
    }
    return make_outcome(g, std::move(out));
}

TransformOutcome contract_add_path2(const UnicyclicGraph& ug, Edge uv, int uprime) {
    const LabeledGraph& g = ug.graph();
    if (!g.has_edge(uv.u, uv.v)) throw std::invalid_argument("contract_add_path2: not an edge");
    if (ug.is_cycle_edge(uv.u, uv.v))
        throw std::invalid_argument("contract_add_path2: edge lies on the cycle");
    if (g.degree(uprime) != 1)
        throw std::invalid_argument("contract_add_path2: uprime is not pendant");

    int u, v;
    if (g.has_edge(uv.u, uprime)) {
        u = uv.u;
        v = uv.v;
    } else if (g.has_edge(uv.v, uprime)) {
        u = uv.v;
        v = uv.u;
    } else {
        throw std::invalid_argument("contract_add_path2: uprime is not attached to uv");
    }
    if (g.degree(u) < 3) throw std::invalid_argument("contract_add_path2: deg(u) < 3");
    if (g.degree(v) < 2) throw std::invalid_argument("contract_add_path2: deg(v) < 2");

    const int n = g.order();
    const int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<int> map = compact_map(n, {hi, uprime});
    LabeledGraph out(n);
    for (const Edge& e : g.edges()) {
        if (e == uv || e == Edge(u, uprime)) continue;
        int a = (e.u == hi) ? lo : e.u;
        int b = (e.v == hi) ? lo : e.v;
        out.add_edge(map[a], map[b]);
    }
    out.add_edge(map[lo], n - 2);  // w - w'
    out.add_edge(n - 2, n - 1);    // w' - u'
    UnicyclicGraph check(out);
    (void)check;
    return make_outcome(g, std::move(out));
}

namespace {

void require_reducible(const UnicyclicGraph& g, int u, int min_n) {
    if (g.order() < min_n) throw std::invalid_argument("cycle_reduce: graph too small");
    if (g.girth() < 5) throw std::invalid_argument("cycle_reduce: girth must be >= 5");
    if (!pendant_profile(g).family_shaped)
        throw std::invalid_argument("cycle_reduce: attachments must be pendant paths of length <= 2");
    if (!g.on_cycle(u)) throw std::invalid_argument("cycle_reduce: u is not on the cycle");
}

}  // namespace

TransformOutcome cycle_reduce(const UnicyclicGraph& ug, int u) {
    require_reducible(ug, u, 6);
    const LabeledGraph& g = ug.graph();
    const int gi = ug.girth();
    const int idx = ug.cycle_index(u);
    const int v = ug.cycle()[(idx + 1) % gi];
    const int w = ug.cycle()[(idx + 2) % gi];

    LabeledGraph out = g;
    for (int x : g.neighbors(v)) {
        if (x == u || x == w) continue;
        out.remove_edge(v, x);
        out.add_edge(u, x);
    }
    for (int y : g.neighbors(w)) {
        if (y == v) continue;
        out.remove_edge(w, y);
        out.add_edge(u, y);
    }
    UnicyclicGraph check(out);
    if (check.girth() != gi - 2) throw std::runtime_error("cycle_reduce: girth did not drop by 2");
    return make_outcome(g, std::move(out));
}

TransformOutcome cycle_reduce_with_pendants(const UnicyclicGraph& ug, int u) {
    require_reducible(ug, u, 8);
    const LabeledGraph& g = ug.graph();
    const int gi = ug.girth();
    const int idx = ug.cycle_index(u);
    const int v = ug.cycle()[(idx + 1) % gi];
    const int w = ug.cycle()[(idx + 2) % gi];

    auto pendant_at = [&](int c) {
        for (int x : g.neighbors(c))
            if (g.degree(x) == 1) return x;
        throw std::invalid_argument("cycle_reduce_with_pendants: missing pendant edge at u, v or w");
    };
    pendant_at(u);
    const int vprime = pendant_at(v);
    const int wprime = pendant_at(w);

    LabeledGraph out = g;
    out.remove_edge(v, w);
    out.add_edge(u, w);
    for (int x : g.neighbors(v)) {
        if (x == u || x == w || x == vprime) continue;
        out.remove_edge(v, x);
        out.add_edge(u, x);
    }
    for (int y : g.neighbors(w)) {
        if (y == v || y == wprime) continue;
        out.remove_edge(w, y);
        out.add_edge(u, y);
    }
    UnicyclicGraph check(out);
    if (check.girth() != gi - 2)
        throw std::runtime_error("cycle_reduce_with_pendants: girth did not drop by 2");
    return make_outcome(g, std::move(out));
}

namespace {

FamilySpec family_of(const UnicyclicGraph& g, const char* who) {
    PendantProfile p = pendant_profile(g);
    if (!p.family_shaped)
        throw std::invalid_argument(std::string(who) + ": graph is not cycle-with-attachments shaped");
    return *p.family;
}

}  // namespace

TransformOutcome collect_pendants(const UnicyclicGraph& ug, int target_index) {
    FamilySpec spec = family_of(ug, "collect_pendants");
    if (spec.girth != 3 && spec.girth != 4)
        throw std::invalid_argument("collect_pendants: girth must be 3 or 4");
    if (target_index < 0 || target_index >= spec.girth)
        throw std::invalid_argument("collect_pendants: target out of range");

    FamilySpec collected;
    collected.girth = spec.girth;
    collected.attachments.assign(spec.girth, {0, 0});
    collected.attachments[target_index] = {spec.total_paths(), spec.total_pendants()};
    return make_outcome(ug.graph(), build_family(collected).graph());
}

TransformOutcome redistribute_keep_pendants(const UnicyclicGraph& ug, RedistributeVariant variant) {
    FamilySpec spec = family_of(ug, "redistribute_keep_pendants");
    const int S = spec.total_paths();
    const int T = spec.total_pendants();
    auto t_of = [&](int i) { return spec.attachments[i].second; };

    FamilySpec target;
    switch (variant) {
        case RedistributeVariant::G3: {
            if (spec.girth != 3)
                throw std::invalid_argument("redistribute: variant needs girth 3");
            if (t_of(0) < 1 || t_of(1) < 1 || t_of(2) < 1)
                throw std::invalid_argument("redistribute: needs a pendant edge at every cycle vertex");
            target.girth = 3;
            target.attachments = {{0, 1}, {0, 1}, {S, T - 2}};
            break;
        }
        case RedistributeVariant::G4AllT: {
            if (spec.girth != 4)
                throw std::invalid_argument("redistribute: variant needs girth 4");
            if (t_of(0) < 1 || t_of(1) < 1 || t_of(2) < 1 || t_of(3) < 1)
                throw std::invalid_argument("redistribute: needs a pendant edge at every cycle vertex");
            target.girth = 4;
            target.attachments = {{0, 1}, {0, 1}, {0, 1}, {S, T - 3}};
            break;
        }
        case RedistributeVariant::G4OneZero: {
            if (spec.girth != 4)
                throw std::invalid_argument("redistribute: variant needs girth 4");
            int zeros = 0, zero_at = -1;
            for (int i = 0; i < 4; ++i)
                if (t_of(i) == 0) {
                    ++zeros;
                    zero_at = i;
                }
            if (zeros != 1)
                throw std::invalid_argument("redistribute: variant needs exactly one bare cycle vertex");
            // Mass lands opposite the bare vertex, single pendant edges on the
            // two vertices between them.
            (void)zero_at;
            target.girth = 4;
            target.attachments = {{0, 0}, {0, 1}, {S, T - 2}, {0, 1}};
            break;
        }
        case RedistributeVariant::G4TwoZero: {
            if (spec.girth != 4)
                throw std::invalid_argument("redistribute: variant needs girth 4");
            bool adjacent_pair = false;
            for (int i = 0; i < 4; ++i)
                if (t_of(i) == 0 && t_of((i + 1) % 4) == 0 && t_of((i + 2) % 4) >= 1 &&
                    t_of((i + 3) % 4) >= 1)
                    adjacent_pair = true;
            if (!adjacent_pair)
                throw std::invalid_argument(
                    "redistribute: variant needs two adjacent bare cycle vertices");
            target.girth = 4;
            target.attachments = {{0, 0}, {0, 0}, {0, 1}, {S, T - 1}};
            break;
        }
    }
    return make_outcome(ug.graph(), build_family(target).graph());
}

bool contract_keeps_matching_hypothesis(const UnicyclicGraph& ug, Edge uv) {
    const LabeledGraph& g = ug.graph();
    for (const Matching& m : all_maximum_matchings(g)) {
        bool u_clear = true, v_clear = true;
        for (const Edge& e : incident_edges_excluding(g, uv.u, uv))
            if (m.contains(e)) u_clear = false;
        for (const Edge& e : incident_edges_excluding(g, uv.v, uv))
            if (m.contains(e)) v_clear = false;
        if (u_clear || v_clear) return true;
    }
    return false;
}

Path2MatchingPrediction path2_matching_prediction(const UnicyclicGraph& ug, Edge uv, int uprime) {
    const LabeledGraph& g = ug.graph();
    int u = g.has_edge(uv.u, uprime) ? uv.u : uv.v;
    int v = (u == uv.u) ? uv.v : uv.u;
    Path2MatchingPrediction out;
    for (const Matching& m : all_maximum_matchings(g)) {
        if (!m.contains(Edge(u, uprime))) continue;
        bool v_side_matched = false;
        for (const Edge& e : incident_edges_excluding(g, v, Edge(u, v)))
            if (m.contains(e)) v_side_matched = true;
        if (v_side_matched) {
            out.any_keep = true;
            continue;
        }
        bool all_saturated = true;
        for (int x : g.neighbors(u)) {
            if (x == v || x == uprime) continue;
            if (!m.saturates(x)) all_saturated = false;
        }
        if (all_saturated)
            out.any_keep = true;
        else
            out.any_grow = true;
    }
    return out;
}

std::optional<int> cycle_reduce_matching_delta(const UnicyclicGraph& ug, int u) {
    const int gi = ug.girth();
    const int idx = ug.cycle_index(u);
    int ti = pendant_edge_count(ug, u);
    int tj = pendant_edge_count(ug, ug.cycle()[(idx + 1) % gi]);
    int tk = pendant_edge_count(ug, ug.cycle()[(idx + 2) % gi]);
    if (ti >= 1 && tj >= 1 && tk >= 1) return -1;
    if (ti == 0 && tj == 0) return 0;
    if (ti >= 1 && tj >= 1 && tk == 0) return 0;
    if (tj >= 1 && tk >= 1 && ti == 0) return 0;
    if (tj >= 1 && ti == 0 && tk == 0) return 1;
    return std::nullopt;
}

std::optional<int> collect_matching_delta(const UnicyclicGraph& ug) {
    PendantProfile p = pendant_profile(ug);
    if (!p.family_shaped) return std::nullopt;
    const FamilySpec& spec = *p.family;
    std::vector<int> t;
    for (auto [si, ti] : spec.attachments) t.push_back(ti);
    if (spec.girth == 3) {
        if (t[0] == 0 || t[1] == 0 || t[2] == 0) return 0;
        return std::nullopt;
    }
    if (spec.girth == 4) {
        int positive = 0;
        for (int x : t)
            if (x > 0) ++positive;
        if (positive == 1) return 0;
        if (t[0] == 0 && t[2] == 0 && t[1] > 0 && t[3] > 0) return 0;
        if (t[1] == 0 && t[3] == 0 && t[0] > 0 && t[2] > 0) return 0;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace sigq
