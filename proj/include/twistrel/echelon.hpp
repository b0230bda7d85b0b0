#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistrel/conditions.hpp"
#include "twistrel/cyclotomic.hpp"
#include "twistrel/partition.hpp"
#include "twistrel/vertexrel.hpp"

namespace twistrel {

struct MatrixRow {
    std::string label;           // originating descriptor (meaningful pre-reduction)
    std::vector<CycNum> coeffs;  // one entry per column
    std::vector<CycNum> cert;    // combination over basisLabels (filled by row_reduce)
};

// Relation coefficients over the lex-ordered column partitions of one (degree, length) cell.
struct RelationMatrix {
    int degree = 0;
    int length = 0;
    int maxPart = 0;
    std::vector<Partition> columns;  // ascending lex
    std::vector<MatrixRow> rows;
    std::vector<std::string> basisLabels;  // row labels the cert entries refer to
};

// Generate all descriptor relations, keep distinct nonzero coefficient rows
// (scaled per descriptor), in descriptor order.
RelationMatrix build_matrix(int degree, int length, int maxPart,
                            const std::vector<RelationDescriptor>& descriptors, int psiOrder = 64,
                            bool parallel = true);

// Reduced row echelon form over Q(w): pivots 1, zeros above and below, zero rows
// last, first-nonzero-column pivoting only. Seeds an identity certificate block
// when none is present, so every pivot row carries its combination.
RelationMatrix row_reduce(const RelationMatrix& m);
bool is_rref(const RelationMatrix& m);

struct PivotCertificate {
    Partition pivot;
    std::vector<std::pair<std::string, CycNum>> combination;  // basis label -> multiplier
};

struct LeadingTermReport {
    int degree = 0;
    int length = 0;
    int maxPart = 0;
    std::vector<Partition> pivots;     // pivot-column partitions, ascending lex
    std::vector<Partition> newPivots;  // pivots with no strictly shorter forbidden window
    std::map<Partition, std::vector<int>, PartitionLess> matchedConditions;
    std::vector<PivotCertificate> certificates;
    int descriptorCount = 0;
    bool budgetExceeded = false;
};

// Classify pivots of m (reduced first if necessary) against the condition set.
LeadingTermReport leading_terms(const RelationMatrix& m, const ConditionSet& cs);

struct ScanOptions {
    int maxPartCap = 0;        // 0 = uncapped; effective maxPart = min(cap, degree - 2(length-1))
    int descriptorBudget = 0;  // 0 = unlimited; exceeding cells are truncated and flagged
    int psiOrder = 64;
    bool parallel = true;
};

// One report per (degree, length) cell, ordered by degree then length.
std::vector<LeadingTermReport> scan(int degreeLo, int degreeHi, std::vector<int> lengths,
                                    const ConditionSet& cs, const ScanOptions& opt = {});

// Re-expand the certified combination against the original (unreduced) matrix and
// check its lex-first nonzero column is exactly the pivot.
bool verify_certificate(const RelationMatrix& original, const PivotCertificate& cert);

// TSV: header "label <col> <col> ..."; one row per relation. Carries the
// coefficient grid only (certificates travel in JSON).
std::string matrix_to_tsv(const RelationMatrix& m);
RelationMatrix matrix_from_tsv(const std::string& text);
std::string matrix_to_json(const RelationMatrix& m);
RelationMatrix matrix_from_json(const std::string& text);
std::string report_to_json(const LeadingTermReport& r);

}  // namespace twistrel
