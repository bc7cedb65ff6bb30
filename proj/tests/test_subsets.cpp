#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "hnk/subset.hpp"

using namespace hnk;

TEST_CASE("weight counts set bits") {
    CHECK(weight(Subset::empty(5)) == 0);
    CHECK(weight(Subset::full(5)) == 5);
    CHECK(weight(Subset::of(5, {2, 4})) == 2);
}

TEST_CASE("symmetric difference is bitwise xor of encodings") {
    const Subset a = Subset::of(5, {1, 2});
    const Subset b = Subset::of(5, {2, 3});
    CHECK(symmetric_difference(a, b) == Subset::of(5, {1, 3}));
    CHECK(symmetric_difference(a, a) == Subset::empty(5));
    CHECK(symmetric_difference(a, Subset::empty(5)) == a);
    CHECK_THROWS_AS(symmetric_difference(a, Subset::empty(4)), std::invalid_argument);
}

TEST_CASE("complement flips within the ground set") {
    CHECK(complement(Subset::of(5, {1, 3})) == Subset::of(5, {2, 4, 5}));
    CHECK(complement(Subset::empty(5)) == Subset::full(5));
    CHECK(complement(Subset::full(5)) == Subset::empty(5));
}

TEST_CASE("subsets_of_size enumerates ascending") {
    const auto none = subsets_of_size(3, 0);
    REQUIRE(none.size() == 1);
    CHECK(none[0] == Subset::empty(3));

    const auto pairs = subsets_of_size(3, 2);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == Subset::of(3, {1, 2}));
    CHECK(pairs[1] == Subset::of(3, {1, 3}));
    CHECK(pairs[2] == Subset::of(3, {2, 3}));

    const auto all = subsets_of_size(3, 3);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == Subset::full(3));

    CHECK_THROWS_AS(subsets_of_size(3, 4), std::invalid_argument);
}

TEST_CASE("construction rejects out-of-range encodings") {
    CHECK_THROWS_AS(Subset(3, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(Subset(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Subset(17, 0), std::invalid_argument);
    CHECK_THROWS_AS(Subset::of(3, {4}), std::invalid_argument);
}

TEST_CASE("weight identity over all pairs, exhaustive to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            for (std::uint32_t y = 0; y < (1u << n); ++y) {
                const int lhs = weight(symmetric_difference(Subset(n, x), Subset(n, y)));
                const int rhs = std::popcount(x) + std::popcount(y) - 2 * std::popcount(x & y);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("complement is an involution and reverses weight") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            const Subset s(n, x);
            REQUIRE(complement(complement(s)) == s);
            REQUIRE(weight(complement(s)) == n - weight(s));
        }
    }
}

TEST_CASE("symmetric difference forms an elementary abelian 2-group") {
    const int n = 5;
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const Subset sx(n, x);
        REQUIRE(symmetric_difference(sx, sx) == Subset::empty(n));
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
            const Subset sy(n, y);
            REQUIRE(symmetric_difference(sx, sy) == symmetric_difference(sy, sx));
            for (std::uint32_t z = 0; z < (1u << n); z += 7) {  // coarse sweep keeps this quick
                const Subset sz(n, z);
                REQUIRE(symmetric_difference(symmetric_difference(sx, sy), sz) ==
                        symmetric_difference(sx, symmetric_difference(sy, sz)));
            }
        }
    }
}

TEST_CASE("text form lists sorted elements in braces") {
    CHECK(to_string(Subset::of(5, {5, 1, 3})) == "{1,3,5}");
    CHECK(to_string(Subset::empty(5)) == "{}");
    CHECK(subset_text(0b10101u) == "{1,3,5}");
}

TEST_CASE("enumeration sizes match binomial counts") {
    for (int n = 1; n <= 10; ++n) {
        std::size_t total = 0;
        for (int s = 0; s <= n; ++s) {
            const auto subsets = subsets_of_size(n, s);
            total += subsets.size();
            for (std::size_t i = 1; i < subsets.size(); ++i) {
                REQUIRE(subsets[i - 1].bits() < subsets[i].bits());
                REQUIRE(subsets[i].weight() == s);
            }
        }
        REQUIRE(total == (std::size_t{1} << n));
    }
}
