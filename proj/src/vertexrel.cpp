#include "twistrel/vertexrel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "twistrel/qseries.hpp"

namespace twistrel {

void GradedMonomial::validate() const {
    alphaPart.validate();
    xPart.validate();
    for (int part : alphaPart.parts) {
        int r = part % 6;
        if (r != 1 && r != 5) throw std::invalid_argument("alpha part must be +-1 mod 6");
    }
}

int compare_monomials(const GradedMonomial& x, const GradedMonomial& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("compare_monomials: unequal degrees");
    // larger |mu| is smaller
    if (x.xPart.weight() != y.xPart.weight()) return x.xPart.weight() > y.xPart.weight() ? -1 : 1;
    // larger l(mu) is smaller
    if (x.xPart.length() != y.xPart.length()) return x.xPart.length() > y.xPart.length() ? -1 : 1;
    // lex-smaller mu is smaller
    if (x.xPart != y.xPart) return lex_less(x.xPart, y.xPart) ? -1 : 1;
    // larger l(lambda) is smaller
    if (x.alphaPart.length() != y.alphaPart.length())
        return x.alphaPart.length() > y.alphaPart.length() ? -1 : 1;
    // lex-smaller lambda is smaller
    if (x.alphaPart != y.alphaPart) return lex_less(x.alphaPart, y.alphaPart) ? -1 : 1;
    return 0;
}

int RelationDescriptor::degree() const {
    int d = p;
    for (int q : leftMultipliers) d += q;
    for (int r : rightMultipliers) d += r;
    return d;
}

void RelationDescriptor::validate() const {
    if (p <= 0) throw std::invalid_argument("descriptor: nonpositive p");
    for (int q : leftMultipliers)
        if (q < 2) throw std::invalid_argument("descriptor: multiplier < 2");
    for (int r : rightMultipliers)
        if (r < 2) throw std::invalid_argument("descriptor: multiplier < 2");
}

std::string RelationDescriptor::label() const {
    std::ostringstream os;
    if (scale != 1) os << "(" << scale.get_str() << ")*";
    for (int q : leftMultipliers) os << "X(-" << q << ")";
    os << (kind == RelKind::R ? "R" : "S") << "(-" << p << ")";
    for (int r : rightMultipliers) os << "X(-" << r << ")";
    return os.str();
}

bool operator==(const RelationDescriptor& a, const RelationDescriptor& b) {
    return a.kind == b.kind && a.p == b.p && a.leftMultipliers == b.leftMultipliers &&
           a.rightMultipliers == b.rightMultipliers && a.scale == b.scale;
}

CycNum Relation::coeff(const Partition& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? CycNum() : it->second;
}

CycNum triple_coeff(int h, int i, int j, int a, int b, int c) {
    if (!(a >= b && b >= c && c >= 1)) throw std::invalid_argument("triple_coeff: invalid triple");
    if (a == b && b == c) return omega_pow(-static_cast<long>(a) * (h + i + j));  // C1
    if (a != b && b != c) {
        // C3: sum over all six assignments of (a,b,c) to the rotation slots
        CycNum s;
        const int v[3] = {a, b, c};
        const int rot[3] = {h, i, j};
        int perm[3] = {0, 1, 2};
        do {
            long e = 0;
            for (int t = 0; t < 3; ++t) e -= static_cast<long>(v[perm[t]]) * rot[t];
            s += omega_pow(e);
        } while (std::next_permutation(perm, perm + 3));
        return s;
    }
    // C2: A the repeated value, B the single one
    int A = (a == b) ? a : b;
    int B = (a == b) ? c : a;
    return omega_pow(-static_cast<long>(A) * (i + j) - static_cast<long>(B) * h) +
           omega_pow(-static_cast<long>(A) * (h + j) - static_cast<long>(B) * i) +
           omega_pow(-static_cast<long>(A) * (h + i) - static_cast<long>(B) * j);
}

std::map<Partition, CycNum, PartitionLess> triple_expansion(TripleKind kind, int n, int maxPart) {
    int h = 0, i = 0, j = 0;
    switch (kind) {
        case TripleKind::R: break;
        case TripleKind::G: j = 1; break;
        case TripleKind::H: h = 3, i = 3, j = 2; break;
    }
    std::map<Partition, CycNum, PartitionLess> out;
    for (int a = 2; a <= maxPart; ++a)
        for (int b = 2; b <= a; ++b) {
            int c = n - a - b;
            if (c < 2 || c > b) continue;
            out.emplace(Partition{a, b, c}, triple_coeff(h, i, j, a, b, c));
        }
    return out;
}

namespace {

// All shifted versions of `mult`: parts[i] = mult[i] + dir*s_i with s_i in
// [0, psiOrder], coefficient prod a_{s_i}, kept while parts stay in [2, maxPart].
struct Shifted {
    std::vector<int> parts;
    BigRational coeff;
    int total;  // sum of shift indices
};

std::vector<Shifted> shift_products(const std::vector<int>& mult, int dir, int maxPart, int psiOrder,
                                    const std::vector<BigRational>& a) {
    std::vector<Shifted> out{{{}, BigRational(1), 0}};
    for (int q : mult) {
        std::vector<Shifted> next;
        for (const auto& s : out)
            for (int i = 0; i <= psiOrder; ++i) {
                int part = q + dir * i;
                if (part < 2 || part > maxPart) break;  // monotone in i: safe to stop
                Shifted t = s;
                t.parts.push_back(part);
                t.coeff *= a[i];
                t.total += i;
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

Partition merge_sorted(const Partition& triple, const std::vector<int>& left,
                       const std::vector<int>& right) {
    std::vector<int> parts = triple.parts;
    parts.insert(parts.end(), left.begin(), left.end());
    parts.insert(parts.end(), right.begin(), right.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

Relation generate_relation(const RelationDescriptor& d, int maxPart, int psiOrder) {
    d.validate();
    Relation rel;
    rel.degree = d.degree();
    rel.length = d.leading_length();
    rel.label = d.label();

    auto add_term = [&](Partition key, const CycNum& val) {
        // Modulo L_(n, l-1): parts <= 1 reduce the length; parts > maxPart are projected out.
        for (int part : key.parts)
            if (part < 2 || part > maxPart) return;
        auto [it, fresh] = rel.terms.emplace(std::move(key), val);
        if (!fresh) it->second += val;
    };

    if (d.kind == RelKind::R) {
        // Theorem 4.1: the second term has X-length 2 plus multipliers, hence lies in
        // L_(n, l-1); multiplier placement is irrelevant modulo lower length.
        std::vector<int> mult = d.leftMultipliers;
        mult.insert(mult.end(), d.rightMultipliers.begin(), d.rightMultipliers.end());
        for (const auto& [tri, co] : triple_expansion(TripleKind::R, d.p, maxPart))
            add_term(merge_sorted(tri, mult, {}), co);
    } else {
        // Proposition "Sleftright": G-part minus the Psi-corrected H-sum with left
        // parts shifted up and right parts shifted down.
        std::vector<int> mult = d.leftMultipliers;
        mult.insert(mult.end(), d.rightMultipliers.begin(), d.rightMultipliers.end());
        for (const auto& [tri, co] : triple_expansion(TripleKind::G, d.p, maxPart))
            add_term(merge_sorted(tri, mult, {}), co);

        const auto a = psi_coefficients(psiOrder);
        auto lefts = shift_products(d.leftMultipliers, +1, maxPart, psiOrder, a);
        auto rights = shift_products(d.rightMultipliers, -1, maxPart, psiOrder, a);
        std::map<int, std::map<Partition, CycNum, PartitionLess>> hcache;
        for (const auto& ls : lefts)
            for (const auto& rs : rights) {
                int P = d.p - ls.total + rs.total;
                if (P < 6) continue;
                auto it = hcache.find(P);
                if (it == hcache.end())
                    it = hcache.emplace(P, triple_expansion(TripleKind::H, P, maxPart)).first;
                CycNum factor(ls.coeff * rs.coeff, BigRational(0));
                for (const auto& [tri, co] : it->second)
                    add_term(merge_sorted(tri, ls.parts, rs.parts), -(factor * co));
            }
    }

    for (auto it = rel.terms.begin(); it != rel.terms.end();)
        it = it->second.is_zero() ? rel.terms.erase(it) : std::next(it);
    return rel;
}

BracketXX bracket_xx(int m, int n) {
    BracketXX b;
    CycNum w2 = omega_pow(2), w1 = omega_pow(1);
    CycNum sixth(make_rational(1, 6), BigRational(0));
    CycNum sign(m % 2 == 0 ? 1 : -1);
    b.xCoeff = w2 * sixth * omega_antisym(n - m);
    b.alphaCoeff = -(w1 * sixth) * sign;
    if (m + n == 0) {
        CycNum c36(make_rational(1, 36), BigRational(0));
        b.cCoeff = w1 * c36 * sign * CycNum(m);
    }
    return b;
}

CycNum bracket_ax(int m, int n) {
    (void)n;
    int r = m % 6;
    if (r < 0) r += 6;
    if (r != 1 && r != 5) throw std::invalid_argument("bracket_ax: m must be +-1 mod 6");
    return CycNum(1);
}

std::vector<RelationDescriptor> enumerate_descriptors(int degree, int length, int maxPart) {
    std::vector<RelationDescriptor> out;
    int nmult = length - 3;
    if (nmult < 0 || maxPart < 2) return out;

    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int count, int minv, int sum) -> void {
        if (count == 0) {
            if (degree - sum >= 6) multisets.push_back(cur);
            return;
        }
        for (int v = minv; v <= maxPart; ++v) {
            if (degree - sum - v < 6 + 2 * (count - 1)) break;
            cur.push_back(v);
            self(self, count - 1, v, sum + v);
            cur.pop_back();
        }
    };
    rec(rec, nmult, 2, 0);

    for (const auto& ms : multisets) {
        int p = degree;
        for (int v : ms) p -= v;
        // All distinct (left, right) multiset splits, assigning each run of equal values.
        std::vector<std::pair<int, int>> runs;  // value, multiplicity
        for (int v : ms) {
            if (!runs.empty() && runs.back().first == v)
                ++runs.back().second;
            else
                runs.emplace_back(v, 1);
        }
        std::vector<std::pair<std::vector<int>, std::vector<int>>> splits{{{}, {}}};
        for (const auto& [v, m] : runs) {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
            for (const auto& [l, r] : splits)
                for (int take = 0; take <= m; ++take) {
                    auto nl = l;
                    auto nr = r;
                    nl.insert(nl.end(), take, v);
                    nr.insert(nr.end(), m - take, v);
                    next.emplace_back(std::move(nl), std::move(nr));
                }
            splits = std::move(next);
        }
        for (RelKind kind : {RelKind::R, RelKind::S})
            for (const auto& [l, r] : splits) {
                RelationDescriptor d;
                d.kind = kind;
                d.leftMultipliers = l;
                d.p = p;
                d.rightMultipliers = r;
                out.push_back(std::move(d));
            }
    }
    return out;
}

std::string relation_to_json(const Relation& r) {
    nlohmann::json j;
    j["degree"] = r.degree;
    j["length"] = r.length;
    j["label"] = r.label;
    auto& terms = j["terms"] = nlohmann::json::array();
    for (const auto& [key, val] : r.terms) terms.push_back({to_string(key), to_string(val)});
    return j.dump();
}

Relation relation_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Relation r;
    r.degree = j.at("degree").get<int>();
    r.length = j.at("length").get<int>();
    r.label = j.at("label").get<std::string>();
    for (const auto& t : j.at("terms"))
        r.terms[parse_partition(t.at(0).get<std::string>())] = parse_cycnum(t.at(1).get<std::string>());
    return r;
}

}  // namespace twistrel
