#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigq/coefficients.hpp"
#include "sigq/enumerate.hpp"
#include "sigq/recurrences.hpp"

namespace sigq {

enum class Parity { Odd, Even };
Parity parse_parity(const std::string& name);
const char* to_string(Parity p);

struct ClassMember {
    UnicyclicGraph graph;
    std::string canonical;
    CoefficientVector phi;
    int matching = 0;
    int girth = 0;
    double ie = 0;
};

// One entry per isomorphism class with phi, matching number and IE
// precomputed; jobs > 1 splits the per-graph work across threads.
std::vector<ClassMember> enumerate_class(int n, std::optional<int> m,
                                         std::optional<Parity> parity, int jobs = 1,
                                         int max_n = kEnumerateMaxN);

struct ClauseCheck {
    int n = 0;
    int m = -1;  // -1 when the clause ranges over the whole class
    std::string parity;
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct ExtremalReport {
    int n = 0;
    std::optional<int> m;
    Parity parity = Parity::Odd;
    std::vector<ClassMember> members;
    std::vector<int> minimal;  // indices of dominance-minimal members
    std::vector<std::vector<ComparisonResult>> pairwise;  // among minimal
    std::vector<int> ie_min;   // indices within 1e-9 of the least IE
    std::vector<ClauseCheck> matches_theorem;  // filled by verify_theorem
};

ExtremalReport search_minima(int n, std::optional<int> m, Parity parity, int jobs = 1,
                             int max_n = kEnumerateMaxN);

enum class TheoremId { T4_1, T4_2, T5_1, T5_2, C4_3, C4_4, C5_3, C5_4, R3_8 };
TheoremId parse_theorem_id(const std::string& name);
const char* to_string(TheoremId id);

struct TheoremReport {
    TheoremId id = TheoremId::T4_1;
    std::vector<ClauseCheck> checks;
    bool all_pass() const;
};

TheoremReport verify_theorem(TheoremId id, int n_min, int n_max, int jobs = 1,
                             int max_n = kEnumerateMaxN);

std::string theorem_report_csv(const TheoremReport& report);

struct IeEntry {
    std::string canonical;
    LabeledGraph graph;
    double ie = 0;
    CoefficientVector phi;
};

// Class members by ascending IE, ties broken by canonical form.
std::vector<IeEntry> ie_ranking(int n, std::optional<int> m, Parity parity, int jobs = 1,
                                int max_n = kEnumerateMaxN);

inline constexpr double kIeTolerance = 1e-9;

}  // namespace sigq
