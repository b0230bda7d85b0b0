#include "twistrel/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twistrel {

SpecializationData specialization_data(const DominantWeight& w) {
    if (w.level() < 1) throw std::invalid_argument("specialization_data: level must be >= 1");
    int ph0 = w.m0 + 1, ph1 = w.m1 + 1;
    int phc = ph0 + 2 * ph1;
    SpecializationData d;
    d.modulus = 2 * phc;
    auto norm = [&](int r) { return ((r % d.modulus) + d.modulus) % d.modulus; };
    std::set<int> excluded = {0, norm(phc), norm(ph0), norm(-ph0), norm(ph1), norm(-ph1),
                              norm(ph0 + ph1), norm(-(ph0 + ph1))};
    for (int r = 0; r < d.modulus; ++r)
        if (!excluded.count(r)) d.jResidues.push_back(r);
    if (w.m0 == w.m1) {
        std::set<int> ks = {norm(ph0), norm(-ph0)};
        d.kResidues.assign(ks.begin(), ks.end());
    }
    return d;
}

TruncatedSeries heisenberg_series(int N) { return progression_product(6, {1, 5}, -1, N); }

TruncatedSeries principal_character(const DominantWeight& w, int N) {
    auto d = specialization_data(w);
    TruncatedSeries chi = heisenberg_series(N);
    std::set<int> js(d.jResidues.begin(), d.jResidues.end());
    std::set<int> ks(d.kResidues.begin(), d.kResidues.end());
    if (!js.empty()) chi = mul(chi, progression_product(d.modulus, js, -1, N));
    if (!ks.empty()) chi = mul(chi, progression_product(d.modulus, ks, +1, N));
    return chi;
}

TruncatedSeries chi5(int N) {
    return progression_product(16, {2, 3, 4, 5, 11, 12, 13, 14}, -1, N);
}

std::vector<BorceaRow> borcea_compare(int N) {
    auto cs = builtin_condition_set("a11-level2");
    auto counts = count_series(cs, N);
    auto chi = chi5(N);
    std::vector<BorceaRow> rows;
    rows.reserve(N + 1);
    for (int n = 0; n <= N; ++n)
        rows.push_back({n, counts.coeffs[n].get_si(), chi.coeffs[n].get_si()});
    return rows;
}

}  // namespace twistrel
