#include "sigq/recurrences.hpp"

#include <stdexcept>

#include "sigq/matrix.hpp"

namespace sigq {

IntPolynomial principal_submatrix_poly(const LabeledGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("principal_submatrix_poly: bad vertex");
    return char_poly(signless_laplacian(g).without(v));
}

LabeledGraph bridge_join(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v) {
    if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
        throw std::invalid_argument("bridge_join: vertex out of range");
    LabeledGraph g(g1.order() + g2.order());
    for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges()) g.add_edge(g1.order() + e.u, g1.order() + e.v);
    g.add_edge(u, g1.order() + v);
    return g;
}

IntPolynomial bridge_join_poly(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v) {
    if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
        throw std::invalid_argument("bridge_join_poly: vertex out of range");
    IntPolynomial q1 = char_poly(signless_laplacian(g1));
    IntPolynomial q2 = char_poly(signless_laplacian(g2));
    IntPolynomial q1u = principal_submatrix_poly(g1, u);
    IntPolynomial q2v = principal_submatrix_poly(g2, v);
    return q1 * q2 - q1 * q2v - q2 * q1u;
}

namespace {

const IntPolynomial kX({0, 1});
const IntPolynomial kXm1({-1, 1});
const IntPolynomial kXm2({-2, 1});
const IntPolynomial kQuad({1, -3, 1});    // x^2 - 3x + 1
const IntPolynomial kQuad42({2, -4, 1});  // x^2 - 4x + 2

}  // namespace

IntPolynomial pendant_vertices_poly(const LabeledGraph& h, int v, int k) {
    if (k < 0) throw std::invalid_argument("pendant_vertices_poly: k < 0");
    if (h.order() < 2) throw std::invalid_argument("pendant_vertices_poly: |V(H)| must be >= 2");
    IntPolynomial qh = char_poly(signless_laplacian(h));
    if (k == 0) return qh;
    IntPolynomial qhv = principal_submatrix_poly(h, v);
    return kXm1.pow(k) * qh - Int(k) * (kX * kXm1.pow(k - 1) * qhv);
}

IntPolynomial pendant_paths2_poly(const LabeledGraph& h, int v, int k) {
    if (k < 0) throw std::invalid_argument("pendant_paths2_poly: k < 0");
    if (h.order() < 2) throw std::invalid_argument("pendant_paths2_poly: |V(H)| must be >= 2");
    IntPolynomial qh = char_poly(signless_laplacian(h));
    if (k == 0) return qh;
    IntPolynomial qhv = principal_submatrix_poly(h, v);
    return kQuad.pow(k) * qh - Int(k) * (kX * kXm2 * kQuad.pow(k - 1) * qhv);
}

FamilyTag parse_family_tag(const std::string& name) {
    if (name == "G31") return FamilyTag::G31;
    if (name == "G32") return FamilyTag::G32;
    if (name == "G41") return FamilyTag::G41;
    if (name == "G42") return FamilyTag::G42;
    if (name == "G43") return FamilyTag::G43;
    if (name == "G44") return FamilyTag::G44;
    if (name == "S3p") return FamilyTag::S3p;
    if (name == "S4p") return FamilyTag::S4p;
    throw std::invalid_argument("unknown family tag: " + name);
}

const char* to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::G31: return "G31";
        case FamilyTag::G32: return "G32";
        case FamilyTag::G41: return "G41";
        case FamilyTag::G42: return "G42";
        case FamilyTag::G43: return "G43";
        case FamilyTag::G44: return "G44";
        case FamilyTag::S3p: return "S3p";
        case FamilyTag::S4p: return "S4p";
    }
    return "?";
}

FamilySpec family_spec(const ClosedFormFamily& f) {
    const int n = f.n, m = f.m;
    auto make = [](int g, std::vector<std::pair<int, int>> att) {
        FamilySpec s;
        s.girth = g;
        s.attachments = std::move(att);
        for (auto [si, ti] : s.attachments)
            if (si < 0 || ti < 0)
                throw std::invalid_argument("family parameters out of range for this (n, m)");
        return s;
    };
    switch (f.tag) {
        case FamilyTag::G31: return make(3, {{0, 0}, {0, 0}, {m - 2, n - 2 * m + 1}});
        case FamilyTag::G32: return make(3, {{0, 1}, {0, 1}, {m - 3, n - 2 * m + 1}});
        case FamilyTag::G41: return make(4, {{0, 0}, {0, 0}, {0, 0}, {m - 2, n - 2 * m}});
        case FamilyTag::G42: return make(4, {{0, 0}, {0, 0}, {0, 1}, {m - 3, n - 2 * m + 1}});
        case FamilyTag::G43: return make(4, {{0, 0}, {0, 1}, {m - 3, n - 2 * m}, {0, 1}});
        case FamilyTag::G44: return make(4, {{0, 1}, {0, 1}, {0, 1}, {m - 4, n - 2 * m + 1}});
        case FamilyTag::S3p: return make(3, {{0, 0}, {0, 0}, {0, n - 3}});
        case FamilyTag::S4p: return make(4, {{0, 0}, {0, 0}, {0, 0}, {0, n - 4}});
    }
    throw std::invalid_argument("bad family tag");
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("parameters out of validity range: " + what);
}

IntPolynomial ip(std::vector<Int> cs) { return IntPolynomial(std::move(cs)); }

}  // namespace

IntPolynomial closed_form_poly(const ClosedFormFamily& f) {
    const long n = f.n, m = f.m;
    switch (f.tag) {
        case FamilyTag::G31: {
            require(m >= 3 && n - 2 * m + 1 >= 0, "G31 needs m >= 3, n >= 2m-1");
            IntPolynomial bracket = ip({Int(-4), Int(12 + 3 * n), Int(9 * m - 25 - 10 * n),
                                        Int(-6 * m + 22 + 6 * n), Int(-8 - n + m), Int(1)});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m + 1) * bracket;
        }
        case FamilyTag::G32: {
            require(m >= 3 && n - 2 * m >= 0, "G32 needs m >= 3, n >= 2m");
            IntPolynomial bracket =
                ip({Int(4), Int(-12 - 3 * n), Int(24 + 14 * n - 9 * m), Int(18 * m - 36 - 19 * n),
                    Int(-8 * m + 27 + 8 * n), Int(-9 - n + m), Int(1)});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m) * bracket;
        }
        case FamilyTag::G41: {
            require(m >= 3 && n - 2 * m - 1 >= 0, "G41 needs m >= 3, n >= 2m+1");
            IntPolynomial bracket =
                ip({Int(-2 * n), Int(10 + 10 * n - 6 * m), Int(14 * m - 25 - 15 * n),
                    Int(-7 * m + 22 + 7 * n), Int(-8 - n + m), Int(1)});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m - 1) * kX * kXm2 * bracket;
        }
        case FamilyTag::G42: {
            require(m >= 3 && n - 2 * m + 1 >= 0, "G42 needs m >= 3, n >= 2m-1");
            IntPolynomial bracket = ip({Int(4 * n), Int(12 * m - 17 - 13 * n),
                                        Int(-7 * m + 20 + 7 * n), Int(-8 - n + m), Int(1)});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m + 1) * kX * bracket;
        }
        case FamilyTag::G43: {
            require(m >= 4 && n - 2 * m - 1 >= 0, "G43 needs m >= 4, n >= 2m+1");
            IntPolynomial bracket =
                ip({Int(2 * n), Int(-14 * n + 6 * m), Int(32 * n - 26 * m + 14),
                    Int(26 * m - 33 - 27 * n), Int(27 + 9 * n - 9 * m), Int(-9 - n + m), Int(1)});
            return kQuad.pow(m - 4) * kXm1.pow(n - 2 * m - 1) * kX * kQuad42 * bracket;
        }
        case FamilyTag::G44: {
            require(m >= 5 && n - 2 * m >= 0, "G44 needs m >= 5, n >= 2m");
            IntPolynomial bracket =
                ip({Int(-2 * n), Int(-8 + 18 * n - 6 * m), Int(-56 * n + 38 * m),
                    Int(50 + 74 * n - 66 * m), Int(-43 * n + 42 * m - 74), Int(11 * n - 11 * m + 43),
                    Int(-11 - n + m), Int(1)});
            return kQuad.pow(m - 5) * kXm1.pow(n - 2 * m) * kX * kQuad42 * bracket;
        }
        case FamilyTag::S3p:
        case FamilyTag::S4p:
            throw std::invalid_argument("no closed-form polynomial for this family tag");
    }
    throw std::invalid_argument("bad family tag");
}

DifferencePair parse_difference_pair(const std::string& name) {
    if (name == "eq1") return DifferencePair::Eq1;
    if (name == "eq2") return DifferencePair::Eq2;
    if (name == "eq3") return DifferencePair::Eq3;
    if (name == "eq4") return DifferencePair::Eq4;
    throw std::invalid_argument("unknown difference pair: " + name);
}

const char* to_string(DifferencePair pair) {
    switch (pair) {
        case DifferencePair::Eq1: return "eq1";
        case DifferencePair::Eq2: return "eq2";
        case DifferencePair::Eq3: return "eq3";
        case DifferencePair::Eq4: return "eq4";
    }
    return "?";
}

std::pair<FamilyTag, FamilyTag> difference_sides(DifferencePair pair) {
    switch (pair) {
        case DifferencePair::Eq1: return {FamilyTag::G31, FamilyTag::G32};
        case DifferencePair::Eq2: return {FamilyTag::G41, FamilyTag::G42};
        case DifferencePair::Eq3: return {FamilyTag::G43, FamilyTag::G44};
        case DifferencePair::Eq4: return {FamilyTag::G44, FamilyTag::G42};
    }
    throw std::invalid_argument("bad difference pair");
}

IntPolynomial difference_factor(DifferencePair pair, int n_, int m_) {
    const long n = n_, m = m_;
    switch (pair) {
        case DifferencePair::Eq1: {
            require(m >= 3 && n - 2 * m >= 0, "eq1 needs m >= 3, n >= 2m");
            IntPolynomial f1 = ip({Int(0), Int(-4), Int(13 - n), Int(3 * n - 3 * m - 11),
                                   Int(-(n - m - 3))});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m) * f1;
        }
        case DifferencePair::Eq2: {
            require(m >= 3 && n - 2 * m - 1 >= 0, "eq2 needs m >= 3, n >= 2m+1");
            IntPolynomial f2 =
                ip({Int(0), Int(-(n + 3)), Int(3 * n - 3 * m + 6), Int(-(n - m + 4)), Int(1)});
            return kQuad.pow(m - 3) * kXm1.pow(n - 2 * m - 1) * kX * f2;
        }
        case DifferencePair::Eq3: {
            require(m >= 5 && n - 2 * m - 1 >= 0, "eq3 needs m >= 5, n >= 2m+1");
            IntPolynomial f3 = ip({Int(0), Int(-8), Int(2 * n + 22), Int(-(7 * n - 6 * m + 25)),
                                   Int(5 * n - 5 * m + 16), Int(-(n - m + 6)), Int(1)});
            return kQuad.pow(m - 5) * kXm1.pow(n - 2 * m - 1) * kX * kQuad42 * f3;
        }
        case DifferencePair::Eq4: {
            require(m >= 5 && n - 2 * m >= 0, "eq4 needs m >= 5, n >= 2m");
            IntPolynomial f4 =
                ip({Int(0), Int(3 * n - 33), Int(-(20 * n - 9 * m - 171)),
                    Int(51 * n - 36 * m - 345), Int(-(63 * n - 56 * m - 338)),
                    Int(37 * n - 36 * m - 170), Int(-(10 * n - 10 * m - 42)), Int(n - m - 4)});
            return kQuad.pow(m - 5) * kXm1.pow(n - 2 * m) * kX * f4;
        }
    }
    throw std::invalid_argument("bad difference pair");
}

}  // namespace sigq
