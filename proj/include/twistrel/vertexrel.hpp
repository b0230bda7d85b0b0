#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistrel/cyclotomic.hpp"
#include "twistrel/partition.hpp"

namespace twistrel {

// Monomial alpha(-lambda) X(-mu) applied to the highest weight vector.
struct GradedMonomial {
    Partition alphaPart;  // parts = +-1 mod 6
    Partition xPart;

    int degree() const { return alphaPart.weight() + xPart.weight(); }
    void validate() const;
};

// Order of spanning monomials: smaller = removed first as a leading term.
// Criteria in order: larger |mu|, then larger l(mu), then lex-smaller mu,
// then larger l(lambda), then lex-smaller lambda. Requires equal degrees.
int compare_monomials(const GradedMonomial& x, const GradedMonomial& y);

enum class RelKind { R, S };
enum class TripleKind { R, G, H };

// X(-q_1)..X(-q_h) T(-p) X(-r_1)..X(-r_m) with T = R or S.
struct RelationDescriptor {
    RelKind kind = RelKind::R;
    std::vector<int> leftMultipliers;   // each >= 2
    int p = 0;                          // degree of the R/S coefficient
    std::vector<int> rightMultipliers;  // each >= 2
    BigRational scale = BigRational(1); // row scaling for matrix assembly only

    int degree() const;
    int leading_length() const { return 3 + static_cast<int>(leftMultipliers.size() + rightMultipliers.size()); }
    std::string label() const;  // e.g. "(1/3)*R(-11)X(-3)", "X(-6)S(-8)"
    void validate() const;      // throws on nonpositive p or multiplier < 2
};

bool operator==(const RelationDescriptor& a, const RelationDescriptor& b);

// Homogeneous relation modulo L_(degree, length-1): sum over keys of
// terms[pi] X(-pi) v; keys have weight = degree, length = length, parts in [2, maxPart].
struct Relation {
    int degree = 0;
    int length = 0;
    std::map<Partition, CycNum, PartitionLess> terms;  // exact zeros pruned
    std::string label;

    CycNum coeff(const Partition& key) const;
};

// Renormalized coefficient of X(-(a,b,c)) in X(nu^h a, nu^i a, nu^j a; w), a >= b >= c >= 1.
CycNum triple_coeff(int h, int i, int j, int a, int b, int c);

// All triples a >= b >= c >= 2, a <= maxPart, a+b+c = n, with rotation indices
// (0,0,0) for R, (0,0,1) for G, (3,3,2) for H (identifying -alpha = nu^3 alpha).
std::map<Partition, CycNum, PartitionLess> triple_expansion(TripleKind kind, int n, int maxPart);

// Leading-length coefficient map of the descriptor's relation; see the R/S
// assembly rules in the implementation. psiOrder caps each Psi shift index and
// must exceed every part-bound-forced cutoff (increasing it further changes nothing).
Relation generate_relation(const RelationDescriptor& d, int maxPart, int psiOrder = 64);

// [X(m), X(n)] = xCoeff X(m+n) + alphaCoeff alpha(m+n) + cCoeff c
// (alpha(m+n) vanishes unless m+n = +-1 mod 6).
struct BracketXX {
    CycNum xCoeff, alphaCoeff, cCoeff;
};
BracketXX bracket_xx(int m, int n);

// Coefficient of X(m+n) in [alpha(m), X(n)]; throws unless m = +-1 mod 6.
CycNum bracket_ax(int m, int n);

// All descriptors of the given degree and leading length with multipliers in
// [2, maxPart] and p >= 6, both kinds, all left/right splits; deterministic order.
std::vector<RelationDescriptor> enumerate_descriptors(int degree, int length, int maxPart);

// JSON export/import: {"degree":..,"length":..,"label":..,"terms":[[partition,coeff],..]}.
std::string relation_to_json(const Relation& r);
Relation relation_from_json(const std::string& text);

}  // namespace twistrel
