#include <stdexcept>

#include "doctest.h"
#include "hnk/counts.hpp"

using namespace hnk;

TEST_CASE("binomials are exact and zero out of range") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("lower-boundary sequence: values and symmetry") {
    const SequenceTable t = u_sequence(SequenceFamily::u_2km1, 3);
    REQUIRE(t.first_index == 1);
    REQUIRE(t.last_index() == 2);
    CHECK(t.at(1) == 6);
    CHECK(t.at(2) == 6);
    for (int k = 2; k <= 25; ++k) {
        const SequenceTable table = u_sequence(SequenceFamily::u_2km1, k);
        for (int m = 1; m <= k - 1; ++m) {
            REQUIRE(table.at(m) == table.at(k - m));
            REQUIRE(table.at(m) > 0);
        }
    }
}

TEST_CASE("upper-boundary sequence: symmetry about k-m+1") {
    for (int k = 1; k <= 25; ++k) {
        const SequenceTable table = u_sequence(SequenceFamily::u_2kp1, k);
        for (int m = 1; m <= k; ++m) {
            REQUIRE(table.at(m) == table.at(k - m + 1));
            REQUIRE(table.at(m) > 0);
        }
    }
}

TEST_CASE("general sequences: spot values") {
    const SequenceTable u = u_sequence(SequenceFamily::u_general, 3, 8);
    CHECK(u.at(1) == 30);
    const SequenceTable v = u_sequence(SequenceFamily::v_general, 5, 12);
    CHECK(v.at(0) == 420);
    CHECK(v.at(0) == 2 * binomial(10, 4));
}

TEST_CASE("monotonicity verdicts") {
    {
        // k = 5 at the lower boundary: decrease, midpoint equality, increase.
        const SequenceTable t = u_sequence(SequenceFamily::u_2km1, 5);
        CHECK(t.at(1) > t.at(2));
        CHECK(t.at(2) == t.at(3));
        CHECK(t.at(3) < t.at(4));
        CHECK(monotonicity_check(t).ok);
    }
    {
        const SequenceTable t = u_sequence(SequenceFamily::u_general, 7, 16);
        CHECK(t.at(1) > t.at(2));
        CHECK(t.at(2) > t.at(3));
        CHECK(monotonicity_check(t).ok);
    }
    {
        // Degenerate window at k = 3 passes vacuously.
        const SequenceTable t = u_sequence(SequenceFamily::u_2kp1, 3);
        CHECK(monotonicity_check(t).ok);
        const SequenceTable g = u_sequence(SequenceFamily::u_general, 3, 8);
        CHECK(monotonicity_check(g).window == "empty window");
    }
    {
        // A tampered table is caught with the violating index.
        SequenceTable t = u_sequence(SequenceFamily::u_general, 9, 20);
        t.values[1] = t.values[0] + 1;
        const MonotonicityVerdict verdict = monotonicity_check(t);
        CHECK_FALSE(verdict.ok);
        REQUIRE(verdict.first_violation.has_value());
        CHECK(*verdict.first_violation == 1);
    }
}

TEST_CASE("strict decrease holds for every k <= 25 and n = 2k+2 .. 2k+10") {
    for (int k = 5; k <= 25; ++k) {
        for (int n = 2 * k + 2; n <= 2 * k + 10; ++n) {
            REQUIRE(monotonicity_check(u_sequence(SequenceFamily::u_general, k, n)).ok);
            REQUIRE(monotonicity_check(u_sequence(SequenceFamily::v_general, k, n)).ok);
        }
    }
}

TEST_CASE("neighbor counts by enumeration match the closed forms on graphs") {
    {
        // Neighbors of a weight-2 set within the weight-3 shell at (5,3).
        const HGraph g(GraphParams{5, 3});
        CHECK(neighbor_count_bruteforce(g, Subset::of(5, {1, 2}), 3) == 6);
        const SequenceTable t = u_sequence(SequenceFamily::u_2km1, 3);
        CHECK(BigInt(neighbor_count_bruteforce(g, Subset::of(5, {1, 2}), 3)) == t.at(1));
    }
    {
        const HGraph g(GraphParams{9, 3});
        CHECK(common_neighbor_count_bruteforce(g, Subset::of(9, {1}), Subset::of(9, {2})) ==
              2 * 21);
        CHECK(BigInt(2 * 21) == 2 * binomial(7, 2));
    }
    {
        const HGraph g(GraphParams{5, 3});
        const Subset x = Subset::of(5, {1, 4});
        CHECK(common_neighbor_count_bruteforce(g, x, x) == neighbor_count_bruteforce(g, x));
        CHECK(common_neighbor_count_bruteforce(g, x, x) == 10);
    }
}

TEST_CASE("lower-boundary closed form equals enumeration everywhere it applies") {
    for (int k = 2; k <= 5; ++k) {
        const int n = 2 * k - 1;
        const HGraph g(GraphParams{n, k});
        const SequenceTable t = u_sequence(SequenceFamily::u_2km1, k);
        for (int m = 1; m <= k - 1; ++m) {
            const auto evens = subsets_of_size(n, 2 * m);
            REQUIRE(BigInt(neighbor_count_bruteforce(g, evens.front(), k)) == t.at(m));
        }
    }
}

TEST_CASE("the odd-size count at the upper boundary matches the corrected binomial only") {
    for (int k = 2; k <= 4; ++k) {
        const int n = 2 * k + 1;
        const HGraph g(GraphParams{n, k});
        for (int m = 1; m <= k + 1; ++m) {
            if (2 * m - 1 > n) continue;
            const auto odds = subsets_of_size(n, 2 * m - 1);
            const BigInt enumerated(neighbor_count_bruteforce(g, odds.front(), k + 1));
            REQUIRE(enumerated == odd_size_upper_neighbor_count(k, m));
            if (m <= k) {
                REQUIRE(enumerated != odd_size_upper_neighbor_count_variant(k, m));
            }
        }
    }
}

TEST_CASE("sequence table usage errors") {
    CHECK_THROWS_AS(u_sequence(SequenceFamily::u_general, 3, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(u_sequence(SequenceFamily::u_2km1, 3, 9), std::invalid_argument);
    const SequenceTable t = u_sequence(SequenceFamily::u_2km1, 3);
    CHECK_THROWS_AS(t.at(0), std::invalid_argument);
    CHECK_THROWS_AS(t.at(3), std::invalid_argument);
    CHECK_THROWS_AS(sequence_family_from_string("u-bogus"), std::invalid_argument);
}
