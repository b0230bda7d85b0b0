#include "twistrel/conditions.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twistrel {

bool ForbiddenPattern::admissible_k(long k) const {
    long r = k % kModulus;
    if (r < 0) r += kModulus;
    return kResidues.count(static_cast<int>(r)) > 0;
}

std::optional<long> ForbiddenPattern::match_window(const int* w) const {
    long d = w[0] - base[0];
    if (d % step != 0) return std::nullopt;
    long k = d / step;
    for (size_t i = 1; i < base.size(); ++i)
        if (w[i] != base[i] + step * k) return std::nullopt;
    if (!admissible_k(k)) return std::nullopt;
    return k;
}

int ConditionSet::max_pattern_len() const {
    int m = noTripleRepeat ? 3 : 0;
    for (const auto& p : patterns) m = std::max(m, p.length());
    return m;
}

namespace {

// Multiplicity map of a partition prefix, used for sub-multiset matching.
using Counts = std::map<int, int>;

bool instance_contained(const ForbiddenPattern& p, long k, const Counts& counts) {
    int prev = 0, need = 0;
    for (size_t i = 0; i < p.base.size(); ++i) {
        int v = static_cast<int>(p.base[i] + p.step * k);
        if (v < 1) return false;
        if (i == 0 || v != prev) {
            if (i) {
                auto it = counts.find(prev);
                if (it == counts.end() || it->second < need) return false;
            }
            prev = v;
            need = 1;
        } else {
            ++need;
        }
    }
    auto it = counts.find(prev);
    return it != counts.end() && it->second >= need;
}

// Does some admissible instance of p that uses value x embed in counts?
bool completes_submultiset(const ForbiddenPattern& p, int x, const Counts& counts) {
    for (size_t i = 0; i < p.base.size(); ++i) {
        long d = x - p.base[i];
        if (d % p.step != 0) continue;
        long k = d / p.step;
        if (!p.admissible_k(k)) continue;
        if (instance_contained(p, k, counts)) return true;
    }
    return false;
}

// Shared recursive enumerator: weakly decreasing prefixes with incremental
// violation checks (prefix-closed pruning for Window/Submultiset; Suffix mode
// defers pattern checks to complete partitions since a suffix match can be
// displaced by later parts).
struct Enumerator {
    const ConditionSet& cs;
    MatchMode mode;
    std::vector<int> seq;
    Counts counts;

    explicit Enumerator(const ConditionSet& c) : cs(c), mode(c.mode) {}

    bool last_ok() const {
        int n = static_cast<int>(seq.size());
        int x = seq[n - 1];
        if (cs.noPartOne && x == 1) return false;
        if (cs.noTripleRepeat && n >= 3 && seq[n - 2] == x && seq[n - 3] == x) return false;
        if (mode == MatchMode::Suffix) return true;
        for (const auto& p : cs.patterns) {
            int L = p.length();
            if (mode == MatchMode::Window) {
                if (n >= L && p.match_window(&seq[n - L])) return false;
            } else {
                if (n >= L && completes_submultiset(p, x, counts)) return false;
            }
        }
        return true;
    }

    bool suffix_clean() const {
        if (mode != MatchMode::Suffix) return true;
        int n = static_cast<int>(seq.size());
        for (const auto& p : cs.patterns) {
            int L = p.length();
            if (n >= L && p.match_window(&seq[n - L])) return false;
        }
        return true;
    }

    void push(int x) {
        seq.push_back(x);
        ++counts[x];
    }
    void pop() {
        --counts[seq.back()];
        seq.pop_back();
    }
};

}  // namespace

std::vector<PatternMatch> find_matches(const Partition& mu, const ConditionSet& cs, MatchMode mode) {
    mu.validate();
    std::vector<PatternMatch> out;
    const auto& v = mu.parts;
    int n = mu.length();
    if (cs.noPartOne)
        for (int i = 0; i < n; ++i)
            if (v[i] == 1) out.push_back({cs.partOneId, 0, i, 1});
    if (cs.noTripleRepeat)
        for (int i = 0; i + 2 < n; ++i)
            if (v[i] == v[i + 1] && v[i] == v[i + 2]) out.push_back({cs.tripleRepeatId, 0, i, 3});
    for (const auto& p : cs.patterns) {
        int L = p.length();
        if (L > n) continue;
        if (mode == MatchMode::Suffix) {
            if (auto k = p.match_window(&v[n - L])) out.push_back({p.id, *k, n - L, L});
        } else if (mode == MatchMode::Window) {
            for (int i = 0; i + L <= n; ++i)
                if (auto k = p.match_window(&v[i])) out.push_back({p.id, *k, i, L});
        } else {
            Counts counts;
            for (int x : v) ++counts[x];
            std::set<long> seen;
            for (int x : v)
                for (size_t j = 0; j < p.base.size(); ++j) {
                    long d = x - p.base[j];
                    if (d % p.step != 0) continue;
                    long k = d / p.step;
                    if (seen.count(k) || !p.admissible_k(k)) continue;
                    seen.insert(k);
                    if (instance_contained(p, k, counts)) out.push_back({p.id, k, -1, L});
                }
        }
    }
    return out;
}

std::vector<PatternMatch> find_matches(const Partition& mu, const ConditionSet& cs) {
    return find_matches(mu, cs, cs.mode);
}

std::pair<bool, std::vector<int>> satisfies(const Partition& mu, const ConditionSet& cs, MatchMode mode) {
    auto matches = find_matches(mu, cs, mode);
    std::vector<int> ids;
    for (const auto& m : matches) ids.push_back(m.id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return {ids.empty(), ids};
}

std::pair<bool, std::vector<int>> satisfies(const Partition& mu, const ConditionSet& cs) {
    return satisfies(mu, cs, cs.mode);
}

namespace {

// Count partitions with first part exactly `first` into counts[weight].
void count_branch(const ConditionSet& cs, int N, int first, std::vector<BigInt>& counts) {
    Enumerator e(cs);
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        for (int x = std::min(rem, mx); x >= 1; --x) {
            e.push(x);
            if (e.last_ok()) {
                if (e.suffix_clean()) ++counts[N - rem + x];
                self(self, rem - x, x);
            }
            e.pop();
        }
    };
    e.push(first);
    if (e.last_ok()) {
        if (e.suffix_clean()) ++counts[first];
        rec(rec, N - first, first);
    }
    e.pop();
}

}  // namespace

TruncatedSeries count_series_serial(const ConditionSet& cs, int N) {
    TruncatedSeries f(N);
    f.coeffs[0] = 1;
    for (int first = 1; first <= N; ++first) count_branch(cs, N, first, f.coeffs);
    return f;
}

TruncatedSeries count_series(const ConditionSet& cs, int N) {
    std::vector<std::vector<BigInt>> slots(N + 1);
#pragma omp parallel for schedule(dynamic)
    for (int first = 1; first <= N; ++first) {
        std::vector<BigInt> local(N + 1, BigInt(0));
        count_branch(cs, N, first, local);
        slots[first] = std::move(local);
    }
    TruncatedSeries f(N);
    f.coeffs[0] = 1;
    for (int first = 1; first <= N; ++first)
        for (int n = 0; n <= N; ++n) f.coeffs[n] += slots[first][n];
    return f;
}

std::vector<ComparisonRow> compare_with_character(const ConditionSet& cs, const TruncatedSeries& chi,
                                                  int N) {
    if (chi.order < N) throw std::invalid_argument("compare_with_character: chi order < N");
    TruncatedSeries g = count_series(cs, N);
    std::vector<ComparisonRow> rows;
    rows.reserve(N + 1);
    for (int n = 0; n <= N; ++n)
        rows.push_back({n, g.coeffs[n], chi.coeffs[n], g.coeffs[n] - chi.coeffs[n]});
    return rows;
}

std::vector<Partition> length7_candidates(int n, const ConditionSet& cs) {
    std::vector<Partition> out;
    Enumerator e(cs);
    const int L = 7;
    auto rec = [&](auto&& self, int rem, int mx, int depth) -> void {
        int slots = L - depth;
        if (slots == 0) {
            if (rem == 0 && satisfies(Partition(e.seq), cs).first) out.emplace_back(e.seq);
            return;
        }
        for (int x = std::min(rem - (slots - 1), mx); x >= 1; --x) {
            if (static_cast<long>(x) * slots < rem) break;
            e.push(x);
            if (e.last_ok()) self(self, rem - x, x, depth + 1);
            e.pop();
        }
    };
    rec(rec, n, n, 0);
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

namespace {

const char* kA22Text = R"(set a22-level5
mode window
flag no-part-one 1
flag no-triple-repeat 2
pattern 3 0,0,-1 1 1 *
pattern 4 0,-1,-1 1 1 *
pattern 5 0,-1,-2 1 6 0,2,3,4,5
pattern 6 0,0,-2 1 6 0,1,2,3,5
pattern 7 0,-2,-2 1 6 0,1,2,3,5
pattern 8 0,-2,-3 1 6 5
pattern 9 0,-1,-3 1 6 4
pattern 10 0,0,-3 1 6 1
pattern 11 4,4,2,2 6 1 *
pattern 12 5,4,2,2 6 1 *
pattern 13 5,5,2,2 1 1 *
pattern 14 10,10,8,7 6 1 *
pattern 15 7,6,5,3 6 1 *
pattern 16 7,6,4,3 2 1 *
pattern 17 6,5,2,2 1 6 0,1,2,3,5
pattern 18 8,8,5,4 1 6 0,1,2,3,5
pattern 19 8,8,5,3 6 1 *
pattern 20 9,7,6,5 6 1 *
pattern 21 10,8,8,5 6 1 *
pattern 22 7,4,4,2 6 1 *
pattern 23 7,6,4,2,2 6 1 *
pattern 24 8,7,5,4,2 6 1 *
pattern 25 9,9,5,5,2 6 1 *
pattern 26 10,8,7,5,4 6 1 *
pattern 27 10,10,8,6,5 6 1 *
pattern 28 11,10,8,6,5 1 6 0,1,2
pattern 29 10,10,8,5,5 6 1 *
pattern 30 11,10,8,5,5 6 1 *
pattern 31 9,8,6,4,2,2 6 1 *
pattern 32 10,10,8,6,4,3 6 1 *
pattern 33 11,8,8,5,2,2 6 1 *
pattern 34 12,11,9,7,4,4 6 1 *
)";

const char* kA11Text = R"(set a11-level2
mode submultiset
flag no-part-one 1
flag no-triple-repeat 2
pattern 3 0,0,-1 1 1 *
pattern 4 0,-1,-1 1 1 *
pattern 5 0,-1,-2 1 3 0,2
pattern 6 0,0,-2 1 3 0,2
pattern 7 0,-2,-2 1 3 0,2
pattern 8 0,-2,-3 1 3 2
pattern 9 0,-1,-3 1 3 1
pattern 10 0,0,-3 1 3 1,2
pattern 11 0,-3,-3 1 3 1,2
)";

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("condition set: empty list entry");
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

ConditionSet parse_condition_set(std::istream& in) {
    ConditionSet cs;
    std::string line;
    int lineno = 0;
    std::set<int> ids;
    auto claim_id = [&](int id) {
        if (!ids.insert(id).second)
            throw std::invalid_argument("condition set: duplicate id " + std::to_string(id));
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string kw;
        if (!(is >> kw)) continue;
        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("condition set line " + std::to_string(lineno) + ": " + what);
        };
        if (kw == "set") {
            if (!(is >> cs.name)) fail("missing set name");
        } else if (kw == "mode") {
            std::string m;
            if (!(is >> m)) fail("missing mode");
            if (m == "window")
                cs.mode = MatchMode::Window;
            else if (m == "suffix")
                cs.mode = MatchMode::Suffix;
            else if (m == "submultiset")
                cs.mode = MatchMode::Submultiset;
            else
                fail("unknown mode '" + m + "'");
        } else if (kw == "flag") {
            std::string which;
            int id;
            if (!(is >> which >> id)) fail("flag needs a name and id");
            claim_id(id);
            if (which == "no-part-one") {
                cs.noPartOne = true;
                cs.partOneId = id;
            } else if (which == "no-triple-repeat") {
                cs.noTripleRepeat = true;
                cs.tripleRepeatId = id;
            } else {
                fail("unknown flag '" + which + "'");
            }
        } else if (kw == "pattern") {
            ForbiddenPattern p;
            std::string base, res;
            if (!(is >> p.id >> base >> p.step >> p.kModulus >> res)) fail("pattern needs 5 fields");
            claim_id(p.id);
            p.base = parse_csv_ints(base);
            if (p.base.empty()) fail("empty base");
            for (size_t i = 1; i < p.base.size(); ++i)
                if (p.base[i] > p.base[i - 1]) fail("base not weakly decreasing");
            if (p.step < 1 || p.kModulus < 1) fail("step and modulus must be positive");
            p.kResidues.clear();
            if (res == "*") {
                for (int r = 0; r < p.kModulus; ++r) p.kResidues.insert(r);
            } else {
                for (int r : parse_csv_ints(res)) {
                    if (r < 0 || r >= p.kModulus) fail("residue out of range");
                    p.kResidues.insert(r);
                }
            }
            cs.patterns.push_back(std::move(p));
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    return cs;
}

ConditionSet load_condition_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open condition set file '" + path + "'");
    return parse_condition_set(in);
}

std::string render_condition_set(const ConditionSet& cs) {
    std::ostringstream os;
    os << "set " << cs.name << "\n";
    os << "mode "
       << (cs.mode == MatchMode::Window ? "window"
                                        : cs.mode == MatchMode::Suffix ? "suffix" : "submultiset")
       << "\n";
    if (cs.noPartOne) os << "flag no-part-one " << cs.partOneId << "\n";
    if (cs.noTripleRepeat) os << "flag no-triple-repeat " << cs.tripleRepeatId << "\n";
    for (const auto& p : cs.patterns) {
        os << "pattern " << p.id << " ";
        for (size_t i = 0; i < p.base.size(); ++i) os << (i ? "," : "") << p.base[i];
        os << " " << p.step << " " << p.kModulus << " ";
        if (static_cast<int>(p.kResidues.size()) == p.kModulus) {
            os << "*";
        } else {
            bool first = true;
            for (int r : p.kResidues) {
                os << (first ? "" : ",") << r;
                first = false;
            }
        }
        os << "\n";
    }
    return os.str();
}

ConditionSet builtin_condition_set(const std::string& name) {
    const char* text = nullptr;
    if (name == "a22-level5")
        text = kA22Text;
    else if (name == "a11-level2")
        text = kA11Text;
    else
        throw std::invalid_argument("unknown condition set '" + name + "'");
    std::istringstream is(text);
    return parse_condition_set(is);
}

}  // namespace twistrel
