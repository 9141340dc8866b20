#include "sigq/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sigq {

int FamilySpec::order() const {
    int n = girth;
    for (auto [s, t] : attachments) n += 2 * s + t;
    return n;
}

int FamilySpec::total_paths() const {
    int s = 0;
    for (auto [si, ti] : attachments) s += si;
    return s;
}

int FamilySpec::total_pendants() const {
    int t = 0;
    for (auto [si, ti] : attachments) t += ti;
    return t;
}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (s_[start] == '-' && pos_ == start + 1))
            throw std::invalid_argument("family notation: expected integer at position " +
                                        std::to_string(start));
        return std::stoi(s_.substr(start, pos_ - start));
    }
    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(const std::string& text) {
    Scanner sc(text);
    if (!sc.consume('G')) throw std::invalid_argument("family notation must start with 'G'");
    FamilySpec spec;
    spec.girth = sc.integer();
    if (spec.girth < 3) throw std::invalid_argument("family girth must be >= 3");
    if (!sc.consume('(')) throw std::invalid_argument("family notation: expected '('");
    while (true) {
        int s = sc.integer();
        if (!sc.consume(',')) throw std::invalid_argument("family notation: expected ','");
        int t = sc.integer();
        if (s < 0 || t < 0) throw std::invalid_argument("family notation: negative attachment count");
        spec.attachments.emplace_back(s, t);
        if (sc.consume(';')) continue;
        if (sc.consume(')')) break;
        throw std::invalid_argument("family notation: expected ';' or ')'");
    }
    if (!sc.at_end()) throw std::invalid_argument("family notation: trailing characters");
    if (static_cast<int>(spec.attachments.size()) != spec.girth)
        throw std::invalid_argument("family notation: pair count differs from girth");
    return spec;
}

std::string format_family(const FamilySpec& spec) {
    std::ostringstream os;
    os << "G" << spec.girth << "(";
    for (size_t i = 0; i < spec.attachments.size(); ++i) {
        if (i) os << ";";
        os << spec.attachments[i].first << "," << spec.attachments[i].second;
    }
    os << ")";
    return os.str();
}

FamilySpec canonical_family(const FamilySpec& spec) {
    const int g = spec.girth;
    FamilySpec best = spec;
    auto consider = [&](const std::vector<std::pair<int, int>>& cand) {
        if (cand < best.attachments) best.attachments = cand;
    };
    std::vector<std::pair<int, int>> rot(spec.attachments);
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < g; ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            consider(rot);
        }
        std::reverse(rot.begin(), rot.end());
    }
    return best;
}

UnicyclicGraph build_family(const FamilySpec& spec) {
    if (spec.girth < 3) throw std::invalid_argument("family girth must be >= 3");
    if (static_cast<int>(spec.attachments.size()) != spec.girth)
        throw std::invalid_argument("family spec: pair count differs from girth");
    for (auto [s, t] : spec.attachments)
        if (s < 0 || t < 0) throw std::invalid_argument("family spec: negative attachment count");

    LabeledGraph g(spec.order());
    const int gi = spec.girth;
    for (int i = 0; i < gi; ++i) g.add_edge(i, (i + 1) % gi);
    int next = gi;
    for (int i = 0; i < gi; ++i) {
        auto [s, t] = spec.attachments[i];
        for (int k = 0; k < s; ++k) {
            g.add_edge(i, next);
            g.add_edge(next, next + 1);
            next += 2;
        }
        for (int k = 0; k < t; ++k) g.add_edge(i, next++);
    }
    return UnicyclicGraph(std::move(g));
}

PendantProfile pendant_profile(const UnicyclicGraph& ug) {
    const LabeledGraph& g = ug.graph();
    PendantProfile out;
    out.dist_to_cycle.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        out.dist_to_cycle[v] = ug.dist_to_cycle(v);
        if (g.degree(v) >= 3) out.branch_vertices.push_back(v);
    }

    // The graph is some G_g(...) exactly when every off-cycle vertex sits on
    // a pendant path of length <= 2 hanging directly from the cycle.
    out.family_shaped = true;
    for (int v = 0; v < g.order(); ++v) {
        if (ug.on_cycle(v)) continue;
        if (g.degree(v) > 2 || ug.dist_to_cycle(v) > 2) out.family_shaped = false;
    }

    // Rooted-tree ownership: BFS from each cycle vertex without re-entering
    // the cycle.
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < ug.girth(); ++i) {
        int root = ug.cycle()[i];
        owner[root] = i;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (ug.on_cycle(w) || owner[w] != -1) continue;
                owner[w] = i;
                stack.push_back(w);
            }
        }
    }

    // One pendant path per leaf: walk up to the first branch vertex or the
    // cycle.
    out.path_lengths.resize(ug.girth());
    FamilySpec spec;
    spec.girth = ug.girth();
    spec.attachments.assign(ug.girth(), {0, 0});
    for (int leaf = 0; leaf < g.order(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        int prev = -1, cur = leaf, len = 0;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            ++len;
            if (ug.on_cycle(next) || g.degree(next) >= 3) {
                prev = next;
                break;
            }
            prev = cur;
            cur = next;
        }
        int tree = owner[leaf];
        out.path_lengths[tree].push_back(len);
        if (ug.on_cycle(prev)) {
            if (len == 1) ++spec.attachments[tree].second;
            if (len == 2) ++spec.attachments[tree].first;
        }
    }
    for (auto& lens : out.path_lengths) std::sort(lens.begin(), lens.end(), std::greater<int>());
    if (out.family_shaped) out.family = spec;
    return out;
}

}  // namespace sigq
