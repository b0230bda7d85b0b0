#include <doctest.h>

#include <stdexcept>

#include "twistrel/partition.hpp"

using namespace twistrel;

TEST_SUITE("partitions") {

TEST_CASE("weight and length") {
    Partition p{5, 5, 2, 2};
    CHECK(p.weight() == 14);
    CHECK(p.length() == 4);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.empty());
}

TEST_CASE("validate") {
    CHECK_NOTHROW(Partition({6, 4, 4, 1}).validate());
    CHECK_NOTHROW(Partition{}.validate());
    CHECK_THROWS_AS(Partition({4, 5}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-2}).validate(), std::invalid_argument);
}

TEST_CASE("lexicographic order") {
    const char* ascending[] = {"4433", "4442", "5333", "5432", "5522", "6332", "6422"};
    for (int i = 0; i + 1 < 7; ++i) {
        Partition a = parse_partition(ascending[i]), b = parse_partition(ascending[i + 1]);
        CHECK(lex_less(a, b));
        CHECK_FALSE(lex_less(b, a));
    }
    CHECK(lex_less(Partition{5, 5}, Partition{5, 5, 1}));  // prefix is smaller
    CHECK_FALSE(lex_less(Partition{5, 5}, Partition{5, 5}));
}

TEST_CASE("rendering") {
    CHECK(to_string(Partition{5, 5, 2, 2}) == "5522");
    CHECK(to_string(Partition{10, 10, 8, 7}) == "10.10.8.7");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("5522") == Partition{5, 5, 2, 2});
    CHECK(parse_partition("10.10.8.7") == Partition{10, 10, 8, 7});
    CHECK(parse_partition("-") == Partition{});
    CHECK_THROWS_AS(parse_partition("54x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4.5"), std::invalid_argument);  // increasing
}

TEST_CASE("round trip") {
    for (auto p : {Partition{9, 9, 5, 5, 2}, Partition{2}, Partition{}, Partition{12, 11, 9, 7, 4, 4}})
        CHECK(parse_partition(to_string(p)) == p);
}

TEST_CASE("partitions_fixed") {
    auto cols = partitions_fixed(14, 4, 2, 6);
    REQUIRE(cols.size() == 7);
    const char* want[] = {"4433", "4442", "5333", "5432", "5522", "6332", "6422"};
    for (int i = 0; i < 7; ++i) CHECK(cols[i] == parse_partition(want[i]));

    CHECK(partitions_fixed(0, 0, 1, 5) == std::vector<Partition>{Partition{}});
    CHECK(partitions_fixed(5, 3, 2, 6).empty());   // 5 < 3*2
    CHECK(partitions_fixed(19, 2, 2, 6).empty());  // 19 > 2*6

    // all partitions of 8: 22 of them across lengths
    int total = 0;
    for (int len = 1; len <= 8; ++len) total += static_cast<int>(partitions_fixed(8, len, 1, 8).size());
    CHECK(total == 22);
}

TEST_CASE("partitions_fixed output is valid and ascending") {
    auto ps = partitions_fixed(21, 5, 2, 13);
    REQUIRE(!ps.empty());
    for (size_t i = 0; i < ps.size(); ++i) {
        CHECK_NOTHROW(ps[i].validate());
        CHECK(ps[i].weight() == 21);
        CHECK(ps[i].length() == 5);
        if (i) CHECK(lex_less(ps[i - 1], ps[i]));
    }
}

}
