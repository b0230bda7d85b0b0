#include <doctest.h>

#include <algorithm>

#include "twistrel/echelon.hpp"

using namespace twistrel;

namespace {

std::vector<RelationDescriptor> deg14_descriptors() {
    return {
        {RelKind::R, {}, 11, {3}, make_rational(1, 3)},
        {RelKind::R, {}, 12, {2}, BigRational(1)},
        {RelKind::S, {}, 11, {3}, BigRational(1)},
        {RelKind::S, {}, 12, {2}, BigRational(1)},
        {RelKind::R, {6}, 8, {}, make_rational(1, 3)},
        {RelKind::R, {5}, 9, {}, BigRational(1)},
        {RelKind::S, {6}, 8, {}, BigRational(1)},
        {RelKind::S, {5}, 9, {}, BigRational(1)},
    };
}

RelationMatrix deg14_matrix() { return build_matrix(14, 4, 6, deg14_descriptors()); }

int rank_of(const RelationMatrix& m) {
    int r = 0;
    for (const auto& row : m.rows) {
        bool nz = false;
        for (const auto& c : row.coeffs) nz = nz || !c.is_zero();
        if (nz) ++r;
    }
    return r;
}

}  // namespace

TEST_SUITE("echelon") {

TEST_CASE("degree-14 relation matrix") {
    auto m = deg14_matrix();
    REQUIRE(m.rows.size() == 8);
    REQUIRE(m.columns.size() == 7);
    CHECK(m.rows[0].label == "(1/3)*R(-11)X(-3)");
    CHECK(m.rows[6].label == "X(-6)S(-8)");
    // spot entries, including the 1/3-scaled rows
    CHECK(m.rows[0].coeffs[0] == parse_cycnum("1"));
    CHECK(m.rows[2].coeffs[3] == parse_cycnum("-2-24*w"));
    CHECK(m.rows[4].coeffs[5] == parse_cycnum("1"));
    CHECK(m.rows[7].coeffs[5] == parse_cycnum("-18+6*w"));
}

TEST_CASE("row reduction of the degree-14 matrix") {
    auto r = row_reduce(deg14_matrix());
    REQUIRE(is_rref(r));
    CHECK(rank_of(r) == 6);
    const char* lastCol[8] = {"4", "-6", "-9", "3/2", "0", "1", "0", "0"};
    for (int i = 0; i < 8; ++i) {
        CHECK(r.rows[i].coeffs[6] == parse_cycnum(lastCol[i]));
        for (int j = 0; j < 6; ++j)
            CHECK(r.rows[i].coeffs[j] == (i == j ? CycNum(1) : CycNum()));
    }
}

TEST_CASE("row reduction is idempotent and scale-invariant") {
    auto r1 = row_reduce(deg14_matrix());
    auto r2 = row_reduce(r1);
    for (size_t i = 0; i < r1.rows.size(); ++i) CHECK(r1.rows[i].coeffs == r2.rows[i].coeffs);

    auto scaled = deg14_descriptors();
    scaled[2].scale = make_rational(-7, 2);
    scaled[5].scale = BigRational(5);
    auto r3 = row_reduce(build_matrix(14, 4, 6, scaled));
    for (size_t i = 0; i < r1.rows.size(); ++i) CHECK(r1.rows[i].coeffs == r3.rows[i].coeffs);
}

TEST_CASE("leading terms and certificates at degree 14") {
    auto m = deg14_matrix();
    auto rep = leading_terms(row_reduce(m), builtin_condition_set("a22-level5"));
    REQUIRE(rep.pivots.size() == 6);
    const char* pivots[6] = {"4433", "4442", "5333", "5432", "5522", "6332"};
    for (int i = 0; i < 6; ++i) CHECK(rep.pivots[i] == parse_partition(pivots[i]));
    CHECK(rep.newPivots == std::vector<Partition>{Partition{5, 5, 2, 2}});
    CHECK(rep.matchedConditions.at(Partition{5, 5, 2, 2}) == std::vector<int>{13});
    CHECK(rep.matchedConditions.at(Partition{6, 3, 3, 2}) == std::vector<int>{3});

    REQUIRE(rep.certificates.size() == 6);
    for (const auto& cert : rep.certificates) CHECK(verify_certificate(m, cert));

    // a corrupted combination must fail
    auto bad = rep.certificates[4];
    REQUIRE(!bad.combination.empty());
    bad.combination[0].second += CycNum(1);
    bool still = verify_certificate(m, bad);
    bad.pivot = Partition{4, 4, 3, 3};
    CHECK((!still || !verify_certificate(m, bad)));
}

TEST_CASE("leading_terms reduces non-RREF input") {
    auto direct = leading_terms(deg14_matrix(), builtin_condition_set("a22-level5"));
    auto reduced = leading_terms(row_reduce(deg14_matrix()), builtin_condition_set("a22-level5"));
    CHECK(direct.pivots == reduced.pivots);
    CHECK(direct.newPivots == reduced.newPivots);
}

TEST_CASE("scan over length 3") {
    auto cs = builtin_condition_set("a22-level5");
    auto reps = scan(6, 12, {3}, cs, {});
    REQUIRE(reps.size() == 7);
    struct Want {
        int degree;
        std::vector<Partition> newPivots;
    };
    const std::vector<Want> want = {
        {6, {{2, 2, 2}}},
        {7, {{3, 2, 2}}},
        {8, {{3, 3, 2}}},
        {9, {{3, 3, 3}, {4, 3, 2}}},
        {10, {{4, 3, 3}, {5, 3, 2}}},
        {11, {{4, 4, 3}, {5, 3, 3}}},
        {12, {{4, 4, 4}, {5, 4, 3}}},
    };
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(reps[i].degree == want[i].degree);
        CHECK(reps[i].length == 3);
        CHECK(reps[i].newPivots == want[i].newPivots);
        CHECK_FALSE(reps[i].budgetExceeded);
    }
}

TEST_CASE("scan cell at degree 14 with the full descriptor set") {
    auto cs = builtin_condition_set("a22-level5");
    auto reps = scan(14, 14, {4}, cs, {});
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].maxPart == 8);
    const char* pivots[8] = {"4433", "4442", "5333", "5432", "5522", "6332", "7322", "8222"};
    REQUIRE(reps[0].pivots.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(reps[0].pivots[i] == parse_partition(pivots[i]));
    CHECK(reps[0].newPivots == std::vector<Partition>{Partition{5, 5, 2, 2}});
}

TEST_CASE("scan respects maxPart cap and budget") {
    auto cs = builtin_condition_set("a22-level5");
    ScanOptions capped;
    capped.maxPartCap = 6;
    auto reps = scan(14, 14, {4}, cs, capped);
    CHECK(reps[0].maxPart == 6);
    CHECK(reps[0].newPivots == std::vector<Partition>{Partition{5, 5, 2, 2}});

    ScanOptions tight;
    tight.descriptorBudget = 3;
    auto cut = scan(14, 14, {4}, cs, tight);
    CHECK(cut[0].budgetExceeded);
    CHECK(cut[0].descriptorCount > 3);
}

TEST_CASE("scan argument validation") {
    auto cs = builtin_condition_set("a22-level5");
    CHECK_THROWS_AS(scan(10, 9, {3}, cs, {}), std::invalid_argument);
    CHECK_THROWS_AS(scan(10, 12, {}, cs, {}), std::invalid_argument);
}

TEST_CASE("parallel scan equals serial scan") {
    auto cs = builtin_condition_set("a22-level5");
    ScanOptions serial;
    serial.parallel = false;
    auto a = scan(12, 16, {4}, cs, serial);
    auto b = scan(12, 16, {4}, cs, {});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pivots == b[i].pivots);
        CHECK(a[i].newPivots == b[i].newPivots);
        CHECK(a[i].descriptorCount == b[i].descriptorCount);
    }
}

TEST_CASE("TSV round trip") {
    auto m = deg14_matrix();
    auto back = matrix_from_tsv(matrix_to_tsv(m));
    CHECK(back.degree == 14);
    CHECK(back.length == 4);
    CHECK(back.columns == m.columns);
    REQUIRE(back.rows.size() == m.rows.size());
    for (size_t i = 0; i < m.rows.size(); ++i) {
        CHECK(back.rows[i].label == m.rows[i].label);
        CHECK(back.rows[i].coeffs == m.rows[i].coeffs);
    }
}

TEST_CASE("JSON round trip") {
    auto m = row_reduce(deg14_matrix());
    auto back = matrix_from_json(matrix_to_json(m));
    CHECK(back.degree == m.degree);
    CHECK(back.maxPart == m.maxPart);
    CHECK(back.columns == m.columns);
    REQUIRE(back.rows.size() == m.rows.size());
    for (size_t i = 0; i < m.rows.size(); ++i) {
        CHECK(back.rows[i].coeffs == m.rows[i].coeffs);
        CHECK(back.rows[i].cert == m.rows[i].cert);
    }
    CHECK(back.basisLabels == m.basisLabels);
}

TEST_CASE("report JSON names the pivots") {
    auto rep = leading_terms(row_reduce(deg14_matrix()), builtin_condition_set("a22-level5"));
    auto j = report_to_json(rep);
    CHECK(j.find("\"5522\"") != std::string::npos);
    CHECK(j.find("\"newPivots\":[\"5522\"]") != std::string::npos);
}

}
