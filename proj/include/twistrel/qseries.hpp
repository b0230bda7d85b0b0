#pragma once

#include <set>
#include <string>
#include <vector>

#include "twistrel/cyclotomic.hpp"

namespace twistrel {

// Exact power series in q truncated at a stated order: coefficients for q^0..q^order.
struct TruncatedSeries {
    int order = 0;
    std::vector<BigInt> coeffs;  // size order + 1

    TruncatedSeries() : coeffs(1, BigInt(0)) {}
    explicit TruncatedSeries(int N) : order(N), coeffs(N + 1, BigInt(0)) {}

    BigInt coeff(int n) const { return (n >= 0 && n <= order) ? coeffs[n] : BigInt(0); }
};

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries series_one(int N);

// All binary ops truncate to min(order f, order g); no silent order promotion.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul_serial(const TruncatedSeries& f, const TruncatedSeries& g);  // reference

// Requires constant coefficient +-1; throws std::domain_error otherwise.
TruncatedSeries inv(const TruncatedSeries& f);

// prod_{n >= 1, n mod modulus in residues} (1 - q^n)^sign truncated at N; sign is +1 or -1.
TruncatedSeries progression_product(int modulus, const std::set<int>& residues, int sign, int N);

// Coefficients a_0..a_N of Psi(x) = (1-3x+4x^2-3x^3+x^4)/(1+3x+4x^2+3x^3+x^4); all integral.
std::vector<BigRational> psi_coefficients(int N);

// "c0 + c1*q + c2*q^2 + ..." with zero terms skipped (plain "0" when all vanish).
std::string to_string(const TruncatedSeries& f);
std::string to_json(const TruncatedSeries& f);  // plain JSON array of coefficient strings

}  // namespace twistrel
