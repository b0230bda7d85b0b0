#pragma once

#include <vector>

#include "twistrel/conditions.hpp"
#include "twistrel/qseries.hpp"

namespace twistrel {

// Dominant integral weight m0*Lambda_0 + m1*Lambda_1; level = m0 + 2*m1.
struct DominantWeight {
    int m0 = 0;
    int m1 = 0;

    int level() const { return m0 + 2 * m1; }
};

// Residue data of the principally specialized character product.
struct SpecializationData {
    int modulus = 0;                // 2*phi(c)
    std::vector<int> jResidues;     // exponents with (1-q^n)^{-1}
    std::vector<int> kResidues;     // exponents with (1-q^n)^{+1}; nonempty only when m0 == m1
};

SpecializationData specialization_data(const DominantWeight& w);

// H(q) = prod_{n = +-1 mod 6} (1-q^n)^{-1}, the Heisenberg factor.
TruncatedSeries heisenberg_series(int N);

// chi_Lambda(q) = H(q) * prod_{n in J} (1-q^n)^{-1} * prod_{n in K} (1-q^n).
TruncatedSeries principal_character(const DominantWeight& w, int N);

// chi(q) = prod_{j = +-2,+-3,+-4,+-5 mod 16} (1-q^j)^{-1}.
TruncatedSeries chi5(int N);

struct BorceaRow {
    int n = 0;
    long long a1Count = 0;
    long long chiCoeff = 0;
};

// Pairs the A1 level-2 condition-count series with chi5; equal componentwise.
std::vector<BorceaRow> borcea_compare(int N);

}  // namespace twistrel
