#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twistrel/partition.hpp"
#include "twistrel/qseries.hpp"

namespace twistrel {

// How a pattern instance must sit inside mu:
//   Window      contiguous window anywhere (forbidden-pattern semantics; default),
//   Suffix      contiguous window at the end of mu (the proven-reduction reading),
//   Submultiset instance contained as a sub-multiset (the level-2 A1 basis theorem).
enum class MatchMode { Window, Suffix, Submultiset };

// Family of forbidden sub-partitions base + step*k*(1,..,1), k integer,
// restricted to k mod kModulus in kResidues and instance parts >= 1.
struct ForbiddenPattern {
    int id = 0;
    std::vector<int> base;  // weakly decreasing; entries may be <= 0 (k shifts them up)
    int step = 1;
    int kModulus = 1;
    std::set<int> kResidues = {0};

    int length() const { return static_cast<int>(base.size()); }
    bool admissible_k(long k) const;
    // Shift k such that w[0..len) equals the instance at k, if any.
    std::optional<long> match_window(const int* w) const;
};

struct ConditionSet {
    std::string name;
    bool noPartOne = false;      // reported with id partOneId
    bool noTripleRepeat = false; // reported with id tripleRepeatId
    int partOneId = 1;
    int tripleRepeatId = 2;
    MatchMode mode = MatchMode::Window;
    std::vector<ForbiddenPattern> patterns;

    int max_pattern_len() const;
};

struct PatternMatch {
    int id;
    long k;    // matched shift (0 for the flag conditions)
    int pos;   // window start index; -1 for sub-multiset matches
    int len;   // matched window / instance length
};

// All matches of flags and patterns under the given mode (duplicates by id possible
// when a pattern matches at several positions or shifts).
std::vector<PatternMatch> find_matches(const Partition& mu, const ConditionSet& cs, MatchMode mode);
std::vector<PatternMatch> find_matches(const Partition& mu, const ConditionSet& cs);

// true iff no flag or pattern matches; second member lists violated ids (sorted, unique).
std::pair<bool, std::vector<int>> satisfies(const Partition& mu, const ConditionSet& cs, MatchMode mode);
std::pair<bool, std::vector<int>> satisfies(const Partition& mu, const ConditionSet& cs);

// Coefficient of q^n = number of partitions of n satisfying cs (empty partition at n = 0).
TruncatedSeries count_series(const ConditionSet& cs, int N);         // parallel over top part
TruncatedSeries count_series_serial(const ConditionSet& cs, int N);  // reference implementation

struct ComparisonRow {
    int n;
    BigInt gCoeff;
    BigInt chiCoeff;
    BigInt delta;  // gCoeff - chiCoeff
};
std::vector<ComparisonRow> compare_with_character(const ConditionSet& cs, const TruncatedSeries& chi,
                                                  int N);

// All length-7 partitions of n satisfying cs, ascending lex.
std::vector<Partition> length7_candidates(int n, const ConditionSet& cs);

// Builtin sets "a22-level5" (34 conditions, window mode) and "a11-level2"
// (11 conditions, sub-multiset mode); throws std::invalid_argument on unknown name.
ConditionSet builtin_condition_set(const std::string& name);

// Declarative text format, one directive per line:
//   set <name>
//   mode window|suffix|submultiset
//   flag no-part-one <id> | flag no-triple-repeat <id>
//   pattern <id> <base csv> <step> <modulus> <residues csv|*>
// '#' starts a comment.
ConditionSet parse_condition_set(std::istream& in);
ConditionSet load_condition_set(const std::string& path);
std::string render_condition_set(const ConditionSet& cs);

}  // namespace twistrel
