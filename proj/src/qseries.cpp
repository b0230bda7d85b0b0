#include "twistrel/qseries.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistrel {

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f.order == g.order && f.coeffs == g.coeffs;
}

TruncatedSeries series_one(int N) {
    TruncatedSeries f(N);
    f.coeffs[0] = 1;
    return f;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries h(std::min(f.order, g.order));
    for (int n = 0; n <= h.order; ++n) h.coeffs[n] = f.coeffs[n] + g.coeffs[n];
    return h;
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries h(std::min(f.order, g.order));
    for (int n = 0; n <= h.order; ++n) h.coeffs[n] = f.coeffs[n] - g.coeffs[n];
    return h;
}

TruncatedSeries mul_serial(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries h(std::min(f.order, g.order));
    for (int n = 0; n <= h.order; ++n) {
        BigInt s(0);
        for (int k = 0; k <= n; ++k) s += f.coeffs[k] * g.coeffs[n - k];
        h.coeffs[n] = s;
    }
    return h;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries h(std::min(f.order, g.order));
    // Each output coefficient is an independent convolution: deterministic under any schedule.
#pragma omp parallel for schedule(dynamic, 8)
    for (int n = 0; n <= h.order; ++n) {
        BigInt s(0);
        for (int k = 0; k <= n; ++k) s += f.coeffs[k] * g.coeffs[n - k];
        h.coeffs[n] = s;
    }
    return h;
}

TruncatedSeries inv(const TruncatedSeries& f) {
    if (f.coeffs[0] != 1 && f.coeffs[0] != -1)
        throw std::domain_error("inv: constant coefficient must be +-1");
    const BigInt c0 = f.coeffs[0];  // self-inverse
    TruncatedSeries h(f.order);
    h.coeffs[0] = c0;
    for (int n = 1; n <= f.order; ++n) {
        BigInt s(0);
        for (int k = 1; k <= n; ++k) s += f.coeffs[k] * h.coeffs[n - k];
        h.coeffs[n] = -c0 * s;
    }
    return h;
}

TruncatedSeries progression_product(int modulus, const std::set<int>& residues, int sign, int N) {
    if (modulus <= 0) throw std::invalid_argument("progression_product: modulus must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("progression_product: sign must be +-1");
    TruncatedSeries f = series_one(N);
    for (int n = 1; n <= N; ++n) {
        if (!residues.count(n % modulus)) continue;
        if (sign < 0) {
            // multiply by 1/(1-q^n): c[k] += c[k-n], ascending
            for (int k = n; k <= N; ++k) f.coeffs[k] += f.coeffs[k - n];
        } else {
            // multiply by (1-q^n): c[k] -= c[k-n], descending
            for (int k = N; k >= n; --k) f.coeffs[k] -= f.coeffs[k - n];
        }
    }
    return f;
}

std::vector<BigRational> psi_coefficients(int N) {
    if (N < 0) throw std::invalid_argument("psi_coefficients: negative order");
    static const long num[5] = {1, -3, 4, -3, 1};
    static const long den[5] = {1, 3, 4, 3, 1};
    std::vector<BigRational> a(N + 1);
    for (int n = 0; n <= N; ++n) {
        BigRational v(n < 5 ? num[n] : 0);
        for (int k = 1; k <= std::min(n, 4); ++k) v -= den[k] * a[n - k];
        a[n] = v;
    }
    return a;
}

std::string to_string(const TruncatedSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= f.order; ++n) {
        if (f.coeffs[n] == 0) continue;
        BigInt c = f.coeffs[n];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (n == 0)
            os << c;
        else if (c == 1)
            os << "q";
        else if (c == -1)
            os << "-q";
        else
            os << c << "*q";
        if (n > 1) os << "^" << n;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string to_json(const TruncatedSeries& f) {
    std::ostringstream os;
    os << "[";
    for (int n = 0; n <= f.order; ++n) {
        if (n) os << ",";
        os << '"' << f.coeffs[n] << '"';  // strings: JSON numbers cannot hold big integers exactly
    }
    os << "]";
    return os.str();
}

}  // namespace twistrel
