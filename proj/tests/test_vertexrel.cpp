#include <doctest.h>

#include <algorithm>

#include "twistrel/vertexrel.hpp"

using namespace twistrel;

namespace {

CycNum cyc(const char* s) { return parse_cycnum(s); }

Relation make(RelKind kind, std::vector<int> left, int p, std::vector<int> right, int maxPart,
              int psiOrder = 64) {
    RelationDescriptor d{kind, std::move(left), p, std::move(right), BigRational(1)};
    return generate_relation(d, maxPart, psiOrder);
}

}  // namespace

TEST_SUITE("vertexrel") {

TEST_CASE("monomial validation") {
    CHECK_NOTHROW((GradedMonomial{Partition{13, 11, 7, 5, 1}, Partition{4, 2}}.validate()));
    CHECK_THROWS_AS((GradedMonomial{Partition{2}, Partition{}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GradedMonomial{Partition{6}, Partition{}}.validate()), std::invalid_argument);
}

TEST_CASE("compare_monomials criteria") {
    GradedMonomial a{Partition{}, Partition{5, 5, 2, 2}}, b{Partition{}, Partition{6, 4, 2, 2}};
    CHECK(compare_monomials(a, b) < 0);  // lex-smaller mu is smaller
    CHECK(compare_monomials(b, a) > 0);
    CHECK(compare_monomials(a, a) == 0);

    GradedMonomial c{Partition{1}, Partition{5, 4, 4}}, d{Partition{}, Partition{5, 5, 4}};
    CHECK(compare_monomials(c, d) > 0);  // larger |mu| is smaller

    GradedMonomial e{Partition{}, Partition{4, 2, 2}}, f{Partition{}, Partition{4, 4}};
    CHECK(compare_monomials(e, f) < 0);  // same |mu|: longer mu is smaller

    GradedMonomial g{Partition{5, 1}, Partition{4, 4}}, h{Partition{1, 1, 1, 1, 1, 1}, Partition{4, 4}};
    CHECK(compare_monomials(h, g) < 0);  // same mu: longer lambda is smaller

    CHECK_THROWS_AS(compare_monomials(a, GradedMonomial{Partition{}, Partition{2}}),
                    std::invalid_argument);
}

TEST_CASE("triple coefficients") {
    // C2 with repeated value A and single value B; C3 over all six permutations
    CHECK(triple_coeff(0, 0, 0, 6, 6, 2) == cyc("3"));
    CHECK(triple_coeff(0, 0, 0, 6, 5, 3) == cyc("6"));
    CHECK(triple_coeff(0, 0, 0, 4, 4, 4) == cyc("1"));
    CHECK(triple_coeff(0, 0, 1, 6, 6, 2) == cyc("2-w"));
    CHECK(triple_coeff(0, 0, 1, 5, 5, 4) == cyc("-1+3*w"));
    CHECK(triple_coeff(0, 0, 1, 4, 4, 4) == cyc("-1+w"));
    CHECK(triple_coeff(0, 0, 1, 6, 4, 4) == cyc("-1+2*w"));
    CHECK(triple_coeff(0, 0, 1, 6, 5, 3) == cyc("2*w"));
    CHECK(triple_coeff(3, 3, 2, 4, 4, 3) == cyc("1+2*w"));
    CHECK(triple_coeff(3, 3, 2, 6, 5, 3) == cyc("2-2*w"));
    CHECK_THROWS_AS(triple_coeff(0, 0, 0, 3, 4, 5), std::invalid_argument);
}

TEST_CASE("triple expansions at degree 14") {
    auto r = triple_expansion(TripleKind::R, 14, 6);
    REQUIRE(r.size() == 4);
    CHECK(r.at(Partition{5, 5, 4}) == cyc("3"));
    CHECK(r.at(Partition{6, 4, 4}) == cyc("3"));
    CHECK(r.at(Partition{6, 5, 3}) == cyc("6"));
    CHECK(r.at(Partition{6, 6, 2}) == cyc("3"));

    auto g = triple_expansion(TripleKind::G, 14, 6);
    CHECK(g.at(Partition{5, 5, 4}) == cyc("-1+3*w"));
    CHECK(g.at(Partition{6, 4, 4}) == cyc("-1+2*w"));
    CHECK(g.at(Partition{6, 5, 3}) == cyc("2*w"));
    CHECK(g.at(Partition{6, 6, 2}) == cyc("2-w"));

    auto h = triple_expansion(TripleKind::H, 14, 6);
    CHECK(h.at(Partition{5, 5, 4}) == cyc("2-3*w"));
    CHECK(h.at(Partition{6, 4, 4}) == cyc("1-2*w"));
    CHECK(h.at(Partition{6, 5, 3}) == cyc("2-2*w"));
    CHECK(h.at(Partition{6, 6, 2}) == cyc("1+w"));

    CHECK(triple_expansion(TripleKind::R, 5, 6).empty());  // below the 2+2+2 floor
}

TEST_CASE("relation goldens at degree 14") {
    // R(-12)X(-2) at maxPart 6
    auto rx = make(RelKind::R, {}, 12, {2}, 6);
    CHECK(rx.degree == 14);
    CHECK(rx.length == 4);
    REQUIRE(rx.terms.size() == 5);
    CHECK(rx.coeff(Partition{4, 4, 4, 2}) == cyc("1"));
    CHECK(rx.coeff(Partition{5, 4, 3, 2}) == cyc("6"));
    CHECK(rx.coeff(Partition{5, 5, 2, 2}) == cyc("3"));
    CHECK(rx.coeff(Partition{6, 3, 3, 2}) == cyc("3"));
    CHECK(rx.coeff(Partition{6, 4, 2, 2}) == cyc("6"));

    // S(-11)X(-3) at maxPart 6
    auto sx = make(RelKind::S, {}, 11, {3}, 6);
    REQUIRE(sx.terms.size() == 6);
    CHECK(sx.coeff(Partition{4, 4, 3, 3}) == cyc("-4"));
    CHECK(sx.coeff(Partition{4, 4, 4, 2}) == cyc("-6*w"));
    CHECK(sx.coeff(Partition{5, 3, 3, 3}) == cyc("-3"));
    CHECK(sx.coeff(Partition{5, 4, 3, 2}) == cyc("-2-24*w"));
    CHECK(sx.coeff(Partition{5, 5, 2, 2}) == cyc("6-6*w"));
    CHECK(sx.coeff(Partition{6, 3, 3, 2}) == cyc("-8"));

    // X(-6)S(-8) at maxPart 6
    auto xs = make(RelKind::S, {6}, 8, {}, 6);
    REQUIRE(xs.terms.size() == 2);
    CHECK(xs.coeff(Partition{6, 3, 3, 2}) == cyc("1-2*w"));
    CHECK(xs.coeff(Partition{6, 4, 2, 2}) == cyc("1-2*w"));

    // unscaled variant of the (1/3)*R(-11)X(-3) row
    auto r11 = make(RelKind::R, {}, 11, {3}, 6);
    CHECK(r11.coeff(Partition{4, 4, 3, 3}) == cyc("3"));
    CHECK(r11.coeff(Partition{5, 3, 3, 3}) == cyc("3"));
    CHECK(r11.coeff(Partition{5, 4, 3, 2}) == cyc("6"));
    CHECK(r11.coeff(Partition{6, 3, 3, 2}) == cyc("6"));
    CHECK(r11.coeff(Partition{5, 5, 2, 2}).is_zero());
}

TEST_CASE("R multiplier placement is irrelevant") {
    for (int q : {2, 3, 5, 6}) {
        auto l = make(RelKind::R, {q}, 14 - q, {}, 6);
        auto r = make(RelKind::R, {}, 14 - q, {q}, 6);
        CHECK(l.terms == r.terms);
    }
}

TEST_CASE("psi cutoff beyond the part bound changes nothing") {
    for (auto [q, p] : std::vector<std::pair<int, int>>{{3, 11}, {2, 12}, {6, 8}}) {
        auto a = make(RelKind::S, {}, p, {q}, 6, 64);
        auto b = make(RelKind::S, {}, p, {q}, 6, 200);
        CHECK(a.terms == b.terms);
        auto c = make(RelKind::S, {q}, p, {}, 8, 64);
        auto d = make(RelKind::S, {q}, p, {}, 8, 200);
        CHECK(c.terms == d.terms);
    }
}

TEST_CASE("empty relation when p is too small") {
    CHECK(make(RelKind::S, {}, 5, {2}, 6).terms.empty());
}

TEST_CASE("descriptor validation and labels") {
    RelationDescriptor d{RelKind::R, {}, 11, {3}, make_rational(1, 3)};
    CHECK(d.degree() == 14);
    CHECK(d.leading_length() == 4);
    CHECK(d.label() == "(1/3)*R(-11)X(-3)");
    RelationDescriptor e{RelKind::S, {6}, 8, {}, BigRational(1)};
    CHECK(e.label() == "X(-6)S(-8)");
    CHECK_THROWS_AS((RelationDescriptor{RelKind::R, {}, 0, {}, BigRational(1)}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((RelationDescriptor{RelKind::R, {1}, 8, {}, BigRational(1)}.validate()),
                    std::invalid_argument);
}

TEST_CASE("enumerate_descriptors") {
    auto ds = enumerate_descriptors(14, 4, 6);
    CHECK(ds.size() == 20);  // 2 kinds x multipliers 2..6 x left/right
    for (const auto& d : ds) {
        CHECK(d.degree() == 14);
        CHECK(d.leading_length() == 4);
        CHECK(d.p >= 6);
    }
    RelationDescriptor rx{RelKind::R, {}, 12, {2}, BigRational(1)};
    RelationDescriptor xs{RelKind::S, {6}, 8, {}, BigRational(1)};
    CHECK(std::count(ds.begin(), ds.end(), rx) == 1);
    CHECK(std::count(ds.begin(), ds.end(), xs) == 1);
}

TEST_CASE("brackets") {
    for (int m = -9; m <= 9; ++m) {
        CHECK(bracket_xx(m, m).xCoeff.is_zero());
        for (int n = -9; n <= 9; ++n)
            CHECK(bracket_xx(m, n).xCoeff == -bracket_xx(n, m).xCoeff);
    }
    auto b = bracket_xx(1, -1);
    CHECK(b.cCoeff == CycNum(BigRational(0), make_rational(-1, 36)));
    CHECK(bracket_xx(2, 3).cCoeff.is_zero());  // m + n != 0
    // alphaCoeff = -(w/6)(-1)^m
    CHECK(bracket_xx(2, 3).alphaCoeff == CycNum(BigRational(0), make_rational(-1, 6)));
    CHECK(bracket_xx(3, 2).alphaCoeff == CycNum(BigRational(0), make_rational(1, 6)));

    CHECK(bracket_ax(1, 0) == CycNum(1));
    CHECK(bracket_ax(-5, 3) == CycNum(1));
    CHECK_THROWS_AS(bracket_ax(2, 0), std::invalid_argument);
}

TEST_CASE("relation JSON round trip") {
    auto rel = make(RelKind::S, {}, 11, {3}, 6);
    auto back = relation_from_json(relation_to_json(rel));
    CHECK(back.degree == rel.degree);
    CHECK(back.length == rel.length);
    CHECK(back.label == rel.label);
    CHECK(back.terms == rel.terms);
}

}
