#include "twistrel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "twistrel/characters.hpp"
#include "twistrel/echelon.hpp"
#include "twistrel/qseries.hpp"
#include "twistrel/vertexrel.hpp"

namespace twistrel {

namespace {

using CheckResult = std::pair<bool, std::string>;

std::string fail(const std::string& msg) { return msg; }

// ---- golden data -----------------------------------------------------------

const char* kDeg14Matrix[8][7] = {
    {"1", "0", "1", "2", "0", "2", "0"},
    {"0", "1", "0", "6", "3", "3", "6"},
    {"-4", "-6*w", "-3", "-2-24*w", "6-6*w", "-8", "0"},
    {"0", "-1+2*w", "0", "-4+8*w", "-1+2*w", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "1"},
    {"0", "0", "1", "6", "3", "0", "0"},
    {"0", "0", "0", "0", "0", "1-2*w", "1-2*w"},
    {"0", "0", "-2", "-8", "-1", "-18+6*w", "-12+6*w"},
};

const char* kDeg14Rref[8][7] = {
    {"1", "0", "0", "0", "0", "0", "4"},
    {"0", "1", "0", "0", "0", "0", "-6"},
    {"0", "0", "1", "0", "0", "0", "-9"},
    {"0", "0", "0", "1", "0", "0", "3/2"},
    {"0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "1"},
    {"0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0"},
};

std::vector<RelationDescriptor> deg14_descriptors() {
    std::vector<RelationDescriptor> d(8);
    d[0] = {RelKind::R, {}, 11, {3}, make_rational(1, 3)};
    d[1] = {RelKind::R, {}, 12, {2}, BigRational(1)};
    d[2] = {RelKind::S, {}, 11, {3}, BigRational(1)};
    d[3] = {RelKind::S, {}, 12, {2}, BigRational(1)};
    d[4] = {RelKind::R, {6}, 8, {}, make_rational(1, 3)};
    d[5] = {RelKind::R, {5}, 9, {}, BigRational(1)};
    d[6] = {RelKind::S, {6}, 8, {}, BigRational(1)};
    d[7] = {RelKind::S, {5}, 9, {}, BigRational(1)};
    return d;
}

const long kChi5[51] = {1,    0,    1,    1,    2,    2,    3,    3,    5,    5,    7,
                             8,    11,   12,   16,   18,   23,   26,   33,   37,   46,   52,
                             63,   72,   87,   98,   117,  133,  157,  178,  209,  236,  276,
                             312,  361,  408,  471,  530,  609,  686,  784,  881,  1004, 1126,
                             1279, 1433, 1621, 1814, 2048, 2286, 2574};

struct PivotTarget {
    int conditionId;
    int degree;
    Partition instance;
};

const std::vector<PivotTarget>& length4_targets() {
    static const std::vector<PivotTarget> t = {
        {11, 12, {4, 4, 2, 2}},   {12, 13, {5, 4, 2, 2}},  {13, 14, {5, 5, 2, 2}},
        {14, 35, {10, 10, 8, 7}}, {15, 21, {7, 6, 5, 3}},  {16, 20, {7, 6, 4, 3}},
        {17, 15, {6, 5, 2, 2}},   {18, 25, {8, 8, 5, 4}},  {19, 24, {8, 8, 5, 3}},
        {20, 27, {9, 7, 6, 5}},   {21, 31, {10, 8, 8, 5}}, {22, 17, {7, 4, 4, 2}},
    };
    return t;
}

// ---- criterion 1: psi coefficients -----------------------------------------

CheckResult check_psi() {
    auto a2 = psi_coefficients(2);
    std::vector<long> want = {1, -6, 18};
    for (int i = 0; i <= 2; ++i)
        if (a2[i] != BigRational(want[i]))
            return {false, fail("psi_coefficients(2)[" + std::to_string(i) + "] != " +
                                std::to_string(want[i]))};

    const int N = 40;
    auto a = psi_coefficients(N);
    TruncatedSeries psi(N);
    for (int i = 0; i <= N; ++i) {
        if (a[i].get_den() != 1) return {false, fail("non-integral psi coefficient")};
        psi.coeffs[i] = a[i].get_num();
    }
    TruncatedSeries num(N), den(N);
    const long numPoly[5] = {1, -3, 4, -3, 1}, denPoly[5] = {1, 3, 4, 3, 1};
    for (int i = 0; i < 5; ++i) {
        num.coeffs[i] = numPoly[i];
        den.coeffs[i] = denPoly[i];
    }
    if (!(mul(psi, den) == num)) return {false, fail("Psi * denominator != numerator through x^40")};
    return {true, {}};
}

// ---- criteria 2 & 3: the degree-14 relation matrix and its echelon form ----

CheckResult check_deg14_matrix() {
    auto m = build_matrix(14, 4, 6, deg14_descriptors());
    if (m.rows.size() != 8) return {false, fail("expected 8 rows")};
    if (m.columns.size() != 7) return {false, fail("expected 7 columns")};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 7; ++c) {
            CycNum want = parse_cycnum(kDeg14Matrix[r][c]);
            if (m.rows[r].coeffs[c] != want)
                return {false, fail("entry (" + std::to_string(r + 1) + "," +
                                    to_string(m.columns[c]) + ") = " +
                                    to_string(m.rows[r].coeffs[c]) + ", want " + kDeg14Matrix[r][c])};
        }
    return {true, {}};
}

CheckResult check_deg14_rref() {
    auto m = row_reduce(build_matrix(14, 4, 6, deg14_descriptors()));
    if (!is_rref(m)) return {false, fail("row_reduce output is not in RREF")};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 7; ++c) {
            CycNum want = parse_cycnum(kDeg14Rref[r][c]);
            if (m.rows[r].coeffs[c] != want)
                return {false, fail("entry (" + std::to_string(r + 1) + "," +
                                    to_string(m.columns[c]) + ") = " +
                                    to_string(m.rows[r].coeffs[c]) + ", want " + kDeg14Rref[r][c])};
        }
    auto rep = leading_terms(m, builtin_condition_set("a22-level5"));
    if (rep.newPivots != std::vector<Partition>{{5, 5, 2, 2}})
        return {false, fail("newPivots at degree 14 != {(5,5,2,2)}")};
    return {true, {}};
}

// ---- criteria 4 & 5: scans -------------------------------------------------

CheckResult check_pivot_cell(int degree, int length, const Partition& instance,
                             bool checkCertificate) {
    int maxPart = degree - 2 * (length - 1);
    auto cs = builtin_condition_set("a22-level5");
    auto descs = enumerate_descriptors(degree, length, maxPart);
    auto m = build_matrix(degree, length, maxPart, descs);
    auto rep = leading_terms(row_reduce(m), cs);
    bool found = false;
    for (const auto& p : rep.pivots)
        if (p == instance) found = true;
    if (!found)
        return {false, fail(to_string(instance) + " not a pivot at degree " +
                            std::to_string(degree))};
    if (checkCertificate) {
        for (const auto& cert : rep.certificates)
            if (cert.pivot == instance)
                return verify_certificate(m, cert)
                           ? CheckResult{true, {}}
                           : CheckResult{false, fail("certificate for " + to_string(instance) +
                                                     " does not reproduce the pivot")};
        return {false, fail("no certificate recorded for " + to_string(instance))};
    }
    return {true, {}};
}

CheckResult check_length4_scan() {
    for (const auto& t : length4_targets()) {
        auto r = check_pivot_cell(t.degree, 4, t.instance, true);
        if (!r.first)
            return {false, fail("condition " + std::to_string(t.conditionId) + ": " + r.second)};
    }
    return {true, {}};
}

CheckResult check_length5_spots() {
    auto r = check_pivot_cell(21, 5, {7, 6, 4, 2, 2}, false);
    if (!r.first) return {false, fail("condition 23: " + r.second)};
    r = check_pivot_cell(30, 5, {9, 9, 5, 5, 2}, false);
    if (!r.first) return {false, fail("condition 25: " + r.second)};
    return {true, {}};
}

// ---- criterion 6: character data -------------------------------------------

CheckResult check_characters() {
    struct Case {
        int m0, m1, modulus;
        std::vector<int> j;
    };
    const std::vector<Case> cases = {
        {5, 0, 16, {2, 3, 4, 5, 11, 12, 13, 14}},
        {3, 1, 16, {1, 3, 5, 7, 9, 11, 13, 15}},
        {1, 2, 16, {1, 4, 6, 7, 9, 10, 12, 15}},
    };
    for (const auto& c : cases) {
        auto d = specialization_data({c.m0, c.m1});
        if (d.modulus != c.modulus || d.jResidues != c.j || !d.kResidues.empty())
            return {false, fail("specialization_data(" + std::to_string(c.m0) + "," +
                                std::to_string(c.m1) + ") mismatch")};
    }
    auto chi = chi5(50);
    for (int n = 0; n <= 50; ++n)
        if (chi.coeffs[n] != BigInt(kChi5[n]))
            return {false, fail("chi5 coefficient of q^" + std::to_string(n) + " = " +
                                chi.coeffs[n].get_str() + ", want " + std::to_string(kChi5[n]))};
    return {true, {}};
}

// ---- criteria 7-9: series comparisons --------------------------------------

CheckResult check_a22_counts() {
    auto rows = compare_with_character(builtin_condition_set("a22-level5"), chi5(48), 48);
    for (const auto& row : rows) {
        BigInt want = (row.n == 42 || row.n == 48) ? BigInt(1) : BigInt(0);
        if (row.delta != want)
            return {false, fail("delta at q^" + std::to_string(row.n) + " = " +
                                row.delta.get_str() + ", want " + want.get_str())};
    }
    return {true, {}};
}

CheckResult check_length7() {
    auto got = length7_candidates(42, builtin_condition_set("a22-level5"));
    if (got.size() != 1 || got[0] != Partition{10, 10, 8, 6, 4, 2, 2})
        return {false, fail("length7_candidates(42) != {(10,10,8,6,4,2,2)}")};
    return {true, {}};
}

CheckResult check_borcea() {
    for (const auto& row : borcea_compare(50))
        if (row.a1Count != row.chiCoeff)
            return {false, fail("mismatch at q^" + std::to_string(row.n) + ": count " +
                                std::to_string(row.a1Count) + " vs chi " +
                                std::to_string(row.chiCoeff))};
    return {true, {}};
}

// ---- criterion 10: property suites -----------------------------------------

CycNum random_cycnum(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-99, 99), den(1, 9);
    return CycNum(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

CheckResult check_field_axioms() {
    std::mt19937_64 rng(0x5eed5eedULL);
    const CycNum one(1);
    for (int i = 0; i < 10000; ++i) {
        CycNum x = random_cycnum(rng), y = random_cycnum(rng), z = random_cycnum(rng);
        if ((x + y) + z != x + (y + z)) return {false, fail("additive associativity")};
        if ((x * y) * z != x * (y * z)) return {false, fail("multiplicative associativity")};
        if (x * (y + z) != x * y + x * z) return {false, fail("distributivity")};
        if (x + y != y + x) return {false, fail("additive commutativity")};
        if (x * y != y * x) return {false, fail("multiplicative commutativity")};
        if (!x.is_zero() && inv(x) * x != one) return {false, fail("multiplicative inverse")};
        if (x + (-x) != CycNum()) return {false, fail("additive inverse")};
    }
    std::uniform_int_distribution<long> expo(-24, 24);
    for (int i = 0; i < 10000; ++i) {
        long d = expo(rng), e = expo(rng);
        if (omega_pow(d) * omega_pow(e) != omega_pow(d + e)) return {false, fail("omega_pow law")};
        if (omega_antisym(d) != omega_pow(d) - omega_pow(-d))
            return {false, fail("omega_antisym definition")};
        if (omega_antisym(d) != -omega_antisym(-d)) return {false, fail("omega_antisym oddness")};
    }
    if (omega_pow(6) != one || omega_pow(3) != CycNum(-1)) return {false, fail("omega_pow table")};
    return {true, {}};
}

// Formal element of the algebra spanned by X(n), alpha(j) (j = +-1 mod 6), c.
struct KElement {
    std::map<int, CycNum> x, a;
    CycNum c;

    void prune() {
        for (auto it = x.begin(); it != x.end();)
            it = it->second.is_zero() ? x.erase(it) : std::next(it);
        for (auto it = a.begin(); it != a.end();)
            it = it->second.is_zero() ? a.erase(it) : std::next(it);
    }
    bool is_zero() const {
        if (!c.is_zero()) return false;
        for (const auto& [k, v] : x)
            if (!v.is_zero()) return false;
        for (const auto& [k, v] : a)
            if (!v.is_zero()) return false;
        return true;
    }
};

bool alpha_index_ok(int j) {
    int r = ((j % 6) + 6) % 6;
    return r == 1 || r == 5;
}

KElement bracket(const KElement& u, const KElement& v) {
    KElement out;
    for (const auto& [m, cm] : u.x)
        for (const auto& [n, cn] : v.x) {
            CycNum f = cm * cn;
            auto b = bracket_xx(m, n);
            out.x[m + n] += f * b.xCoeff;
            if (alpha_index_ok(m + n)) out.a[m + n] += f * b.alphaCoeff;
            out.c += f * b.cCoeff;
        }
    for (const auto& [j, cj] : u.a)
        for (const auto& [n, cn] : v.x) out.x[j + n] += cj * cn * bracket_ax(j, n);
    for (const auto& [m, cm] : u.x)
        for (const auto& [j, cj] : v.a) out.x[j + m] -= cm * cj * bracket_ax(j, m);
    for (const auto& [i, ci] : u.a)
        for (const auto& [j, cj] : v.a)
            if (i + j == 0) out.c += ci * cj * CycNum(make_rational(i, 6), BigRational(0));
    out.prune();
    return out;
}

CheckResult check_jacobi() {
    std::vector<KElement> basis;
    for (int n = -12; n <= 12; ++n) {
        KElement e;
        e.x[n] = CycNum(1);
        basis.push_back(e);
    }
    for (int j = -12; j <= 12; ++j)
        if (alpha_index_ok(j)) {
            KElement e;
            e.a[j] = CycNum(1);
            basis.push_back(e);
        }
    KElement cEl;
    cEl.c = CycNum(1);
    basis.push_back(cEl);

    for (const auto& e1 : basis)
        for (const auto& e2 : basis)
            for (const auto& e3 : basis) {
                KElement s = bracket(bracket(e1, e2), e3);
                KElement t = bracket(bracket(e2, e3), e1);
                KElement u = bracket(bracket(e3, e1), e2);
                KElement total;
                for (const auto& el : {s, t, u}) {
                    for (const auto& [k, val] : el.x) total.x[k] += val;
                    for (const auto& [k, val] : el.a) total.a[k] += val;
                    total.c += el.c;
                }
                if (!total.is_zero()) return {false, fail("Jacobi identity fails")};
            }
    return {true, {}};
}

void alpha_partitions(int n, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        if (!alpha_index_ok(p)) continue;
        cur.push_back(p);
        alpha_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

CheckResult check_order_totality() {
    const int degree = 8;
    std::vector<GradedMonomial> mons;
    for (int aw = 0; aw <= degree; ++aw) {
        std::vector<Partition> alphas;
        std::vector<int> cur;
        alpha_partitions(aw, aw, cur, alphas);
        if (aw == 0) alphas = {Partition{}};
        std::vector<Partition> xs;
        int xw = degree - aw;
        if (xw == 0)
            xs = {Partition{}};
        else
            for (int len = 1; len <= xw; ++len)
                for (const auto& p : partitions_fixed(xw, len, 1, xw)) xs.push_back(p);
        for (const auto& ap : alphas)
            for (const auto& xp : xs) mons.push_back({ap, xp});
    }
    size_t n = mons.size();
    std::vector<std::vector<int>> cmp(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cmp[i][j] = compare_monomials(mons[i], mons[j]);
    for (size_t i = 0; i < n; ++i) {
        if (cmp[i][i] != 0) return {false, fail("reflexivity")};
        for (size_t j = 0; j < n; ++j) {
            if (cmp[i][j] != -cmp[j][i]) return {false, fail("antisymmetry")};
            if (i != j && cmp[i][j] == 0) return {false, fail("distinct monomials compare equal")};
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (cmp[i][j] <= 0 && cmp[j][k] <= 0 && cmp[i][k] > 0)
                    return {false, fail("transitivity")};
    return {true, {}};
}

void all_partitions(int n, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

CheckResult check_double_implementation() {
    for (const char* name : {"a22-level5", "a11-level2"}) {
        auto cs = builtin_condition_set(name);
        auto fast = count_series(cs, 12);
        auto serial = count_series_serial(cs, 12);
        if (!(fast == serial))
            return {false, fail(std::string(name) + ": parallel != serial count")};
        std::vector<BigInt> brute(13, BigInt(0));
        brute[0] = 1;
        for (int n = 1; n <= 12; ++n) {
            std::vector<Partition> ps;
            std::vector<int> cur;
            all_partitions(n, n, cur, ps);
            for (const auto& mu : ps) {
                bool a = satisfies(mu, cs).first;
                bool b = satisfies_bruteforce(mu, cs);
                if (a != b)
                    return {false, fail(std::string(name) + ": engines disagree on " +
                                        to_string(mu))};
                if (a) brute[n] += 1;
            }
        }
        for (int n = 0; n <= 12; ++n)
            if (fast.coeffs[n] != brute[n])
                return {false,
                        fail(std::string(name) + ": count mismatch at n=" + std::to_string(n))};
    }
    return {true, {}};
}

CheckResult check_properties() {
    for (auto* fn : {check_field_axioms, check_jacobi, check_order_totality,
                     check_double_implementation}) {
        auto r = fn();
        if (!r.first) return r;
    }
    return {true, {}};
}

}  // namespace

bool satisfies_bruteforce(const Partition& mu, const ConditionSet& cs) {
    if (cs.noPartOne)
        for (int p : mu.parts)
            if (p == 1) return false;
    if (cs.noTripleRepeat)
        for (size_t i = 0; i + 2 < mu.parts.size(); ++i)
            if (mu.parts[i] == mu.parts[i + 2]) return false;
    if (mu.parts.empty()) return true;
    int top = mu.parts[0];
    auto ceil_div = [](long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    for (const auto& pat : cs.patterns) {
        int lo = pat.base.back(), hi = pat.base.front();
        // smallest k keeping all instance parts >= 1; largest keeping top part <= mu[0]
        long kMin = ceil_div(1 - lo, pat.step);
        long kMax = (static_cast<long>(top) - hi) / pat.step;
        for (long k = kMin; k <= kMax; ++k) {
            if (!pat.admissible_k(k)) continue;
            std::vector<int> inst;
            for (int b : pat.base) inst.push_back(b + static_cast<int>(k) * pat.step);
            if (inst.back() < 1) continue;
            bool hit = false;
            size_t L = inst.size();
            if (cs.mode == MatchMode::Submultiset) {
                std::map<int, int> counts;
                for (int p : mu.parts) ++counts[p];
                hit = true;
                std::map<int, int> need;
                for (int v : inst) ++need[v];
                for (const auto& [v, c] : need)
                    if (counts[v] < c) hit = false;
            } else if (cs.mode == MatchMode::Suffix) {
                if (mu.parts.size() >= L)
                    hit = std::equal(inst.begin(), inst.end(), mu.parts.end() - L);
            } else {
                for (size_t off = 0; off + L <= mu.parts.size() && !hit; ++off)
                    hit = std::equal(inst.begin(), inst.end(), mu.parts.begin() + off);
            }
            if (hit) return false;
        }
    }
    return true;
}

int run_acceptance(std::ostream& os, const std::vector<int>& only) {
    struct Criterion {
        const char* name;
        std::function<CheckResult()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"Psi coefficients and defining identity through x^40", check_psi},
        {"relation goldens and the degree-14 relation matrix", check_deg14_matrix},
        {"row reduction and newPivots at degree 14", check_deg14_rref},
        {"length-4 scans: conditions 11-22 pivots with certificates", check_length4_scan},
        {"length-5 spot checks: (7,6,4,2,2) and (9,9,5,5,2)", check_length5_spots},
        {"specialization data and chi5 through q^50", check_characters},
        {"a22-level5 counts vs chi5: zero except +1 at 42, 48", check_a22_counts},
        {"unique length-7 candidate at 42", check_length7},
        {"Borcea duality: a11-level2 counts equal chi5 through q^50", check_borcea},
        {"property suites: field, Jacobi, order, double implementation", check_properties},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int idx = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), idx) == only.end()) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = criteria[i].fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        os << "criterion " << std::setw(2) << idx << ": " << (r.first ? "pass" : "FAIL") << "  "
           << criteria[i].name;
        if (!r.first) os << " — " << r.second;
        os << "  (" << std::fixed << std::setprecision(2) << secs << " s)\n" << std::flush;
        if (!r.first) ++failures;
    }
    return failures;
}

}  // namespace twistrel
