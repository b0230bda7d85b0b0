#include <doctest.h>

#include <random>

#include "twistrel/cyclotomic.hpp"

using namespace twistrel;

namespace {

CycNum rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 7);
    return CycNum(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("omega power table") {
    CHECK(omega_pow(0) == CycNum(1));
    CHECK(omega_pow(1) == CycNum(BigRational(0), BigRational(1)));
    CHECK(omega_pow(2) == CycNum(BigRational(-1), BigRational(1)));
    CHECK(omega_pow(3) == CycNum(-1));
    CHECK(omega_pow(4) == CycNum(BigRational(0), BigRational(-1)));
    CHECK(omega_pow(5) == CycNum(BigRational(1), BigRational(-1)));
    for (long k = -30; k <= 30; ++k) {
        CHECK(omega_pow(k + 6) == omega_pow(k));
        CHECK(omega_pow(k + 3) == -omega_pow(k));
        CHECK(omega_pow(k) * omega_pow(-k) == CycNum(1));
    }
}

TEST_CASE("omega squared identity") {
    CycNum w = omega_pow(1);
    CHECK(w * w == w - CycNum(1));  // w^2 = w - 1
}

TEST_CASE("omega_antisym") {
    CycNum twoWminus1(BigRational(-1), BigRational(2));
    for (long d = -24; d <= 24; ++d) {
        CHECK(omega_antisym(d) == omega_pow(d) - omega_pow(-d));
        CHECK(omega_antisym(-d) == -omega_antisym(d));
        long r = ((d % 6) + 6) % 6;
        if (r == 0 || r == 3) CHECK(omega_antisym(d).is_zero());
        if (r == 1 || r == 2) CHECK(omega_antisym(d) == twoWminus1);
        if (r == 4 || r == 5) CHECK(omega_antisym(d) == -twoWminus1);
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        CycNum x = rnd(rng), y = rnd(rng), z = rnd(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x + (-x) == CycNum());
        if (!x.is_zero()) CHECK(inv(x) * x == CycNum(1));
    }
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(inv(CycNum()), std::domain_error);
    CHECK(inv(omega_pow(1)) == omega_pow(5));
}

TEST_CASE("to_string formats") {
    CHECK(to_string(CycNum()) == "0");
    CHECK(to_string(CycNum(1)) == "1");
    CHECK(to_string(CycNum(-1)) == "-1");
    CHECK(to_string(omega_pow(1)) == "w");
    CHECK(to_string(-omega_pow(1)) == "-w");
    CHECK(to_string(CycNum(BigRational(1), BigRational(-2))) == "1-2*w");
    CHECK(to_string(CycNum(BigRational(-2), BigRational(-24))) == "-2-24*w");
    CHECK(to_string(CycNum(make_rational(3, 2), BigRational(0))) == "3/2");
}

TEST_CASE("parse round trip") {
    for (const char* s : {"0", "1", "-1", "w", "-w", "1-2*w", "-2-24*w", "3/2", "6-6*w",
                          "1/3+2/3*w", "-18+6*w"}) {
        CycNum v = parse_cycnum(s);
        CHECK(parse_cycnum(to_string(v)) == v);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        CycNum x = rnd(rng);
        CHECK(parse_cycnum(to_string(x)) == x);
    }
}

TEST_CASE("parse rejects garbage") {
    CHECK_THROWS_AS(parse_cycnum(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycnum("q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycnum("w^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycnum("1+"), std::invalid_argument);
}

}
