#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace twistrel {

using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den as a canonical rational (mpq_class requires explicit canonicalization).
BigRational make_rational(long num, long den = 1);

// Element a + b*w of Q(w), w a primitive 6th root of unity, w^2 = w - 1.
struct CycNum {
    BigRational a;
    BigRational b;

    CycNum() : a(0), b(0) {}
    CycNum(long v) : a(v), b(0) {}  // NOLINT: implicit rational embedding is intended
    CycNum(BigRational av, BigRational bv) : a(std::move(av)), b(std::move(bv)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
};

bool operator==(const CycNum& x, const CycNum& y);
inline bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

CycNum operator+(const CycNum& x, const CycNum& y);
CycNum operator-(const CycNum& x, const CycNum& y);
CycNum operator*(const CycNum& x, const CycNum& y);
CycNum operator-(const CycNum& x);
CycNum& operator+=(CycNum& x, const CycNum& y);
CycNum& operator-=(CycNum& x, const CycNum& y);
CycNum& operator*=(CycNum& x, const CycNum& y);

// Multiplicative inverse; throws std::domain_error at 0.
CycNum inv(const CycNum& x);

// w^n for any integer n (reduced mod 6).
CycNum omega_pow(long n);

// w^d - w^{-d}: 0 for d = 0,3; 2w-1 for d = 1,2; 1-2w for d = 4,5 (mod 6).
CycNum omega_antisym(long d);

// Rendering "a", "b*w", "a+b*w", "a-b*w" with reduced rationals ("w", "-w" for b = +-1).
std::string to_string(const CycNum& x);
std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Inverse of to_string; throws std::invalid_argument on malformed input.
CycNum parse_cycnum(const std::string& s);

}  // namespace twistrel
