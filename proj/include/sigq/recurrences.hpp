#pragma once

#include <string>
#include <utility>

#include "sigq/family.hpp"
#include "sigq/graph.hpp"
#include "sigq/polynomial.hpp"

namespace sigq {

// Characteristic polynomial of Q(G) with the row and column of v removed.
// Degrees keep their values from G; this is not the signless Laplacian of
// G minus v.
IntPolynomial principal_submatrix_poly(const LabeledGraph& g, int v);

// The graph obtained by joining u in g1 to v in g2 by a bridge; vertices of
// g2 are shifted by |V(g1)|.
LabeledGraph bridge_join(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v);

// Q of the bridge join from the factors:
// Q_G = Q_G1*Q_G2 - Q_G1*Q_{G2|v} - Q_G2*Q_{G1|u}.
IntPolynomial bridge_join_poly(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v);

// Q of H with k pendant vertices attached at v:
// (x-1)^k Q_H - k x (x-1)^(k-1) Q_{H|v}.  Requires |V(H)| >= 2, k >= 0.
IntPolynomial pendant_vertices_poly(const LabeledGraph& h, int v, int k);

// Q of H with k pendant paths of length 2 attached at v:
// (x^2-3x+1)^k Q_H - k x (x-2) (x^2-3x+1)^(k-1) Q_{H|v}.
IntPolynomial pendant_paths2_poly(const LabeledGraph& h, int v, int k);

// The eight named extremal families. G3*/G4* have closed-form polynomials;
// S3p/S4p are the all-pendants-on-one-vertex graphs (m is ignored for them).
enum class FamilyTag { G31, G32, G41, G42, G43, G44, S3p, S4p };

struct ClosedFormFamily {
    FamilyTag tag;
    int n = 0;
    int m = 0;
};

FamilyTag parse_family_tag(const std::string& name);
const char* to_string(FamilyTag tag);

// Attachment-notation spec of the family member; throws when the family
// parameters would be negative.
FamilySpec family_spec(const ClosedFormFamily& f);

// Exact expansion of the published product formula; only the six G3*/G4*
// tags, inside their exponent-validity ranges (m >= 3 for G31/G32/G41/G42,
// m >= 4 for G43, m >= 5 for G44, plus nonnegative (x-1) exponents).
IntPolynomial closed_form_poly(const ClosedFormFamily& f);

enum class DifferencePair { Eq1, Eq2, Eq3, Eq4 };

DifferencePair parse_difference_pair(const std::string& name);
const char* to_string(DifferencePair pair);

// Left and right family of each difference.
std::pair<FamilyTag, FamilyTag> difference_sides(DifferencePair pair);

// Exact expansion of the factored difference of the pair's closed forms.
IntPolynomial difference_factor(DifferencePair pair, int n, int m);

}  // namespace sigq
