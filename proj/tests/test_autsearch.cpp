#include <set>

#include "doctest.h"
#include "hnk/autsearch.hpp"

using namespace hnk;

TEST_CASE("hypercube stabilizer and full order at (4,1)") {
    const HGraph g(GraphParams{4, 1});
    const StabilizerResult stab = stabilizer_of_empty(g);
    CHECK(stab.order() == 24);
    CHECK(stab.closed_under_group_ops());
    const AutOrderResult aut = aut_order_detail(g);
    CHECK(aut.orbit_size == 16);
    CHECK(aut.order == 384);
}

TEST_CASE("lower-boundary stabilizer at (5,3) has order 720") {
    const HGraph g(GraphParams{5, 3});
    const StabilizerResult stab = stabilizer_of_empty(g);
    CHECK(stab.order() == 720);
    CHECK(stab.closed_under_group_ops());
    CHECK(aut_order(g) == 23040);
}

TEST_CASE("even component at (6,2) reaches the same order as (5,3)") {
    const HGraph g(GraphParams{6, 2, Component::even});
    CHECK(aut_order(g) == 23040);
}

TEST_CASE("disconnected whole graph at (3,2): component permutations are found") {
    const HGraph g(GraphParams{3, 2});
    const StabilizerResult stab = stabilizer_of_empty(g);
    // Fixing the empty set pins its 4-clique pointwise up to 3! and leaves
    // the opposite 4-clique free: 3! * 4! maps.
    CHECK(stab.order() == 144);
    CHECK(stab.closed_under_group_ops());
    CHECK(aut_order(g) == 1152);
}

TEST_CASE("whole graph at (4,2): two 8-vertex components swap freely") {
    const HGraph g(GraphParams{4, 2});
    CHECK(aut_order(g) == 294912);
}

TEST_CASE("search result is independent of the branching direction") {
    SearchOptions forward;
    SearchOptions backward;
    backward.reverse_branching = true;
    for (const GraphParams params :
         {GraphParams{4, 1}, GraphParams{3, 2}, GraphParams{5, 2, Component::even}}) {
        const HGraph g(params);
        const StabilizerResult a = stabilizer_of_empty(g, forward);
        const StabilizerResult b = stabilizer_of_empty(g, backward);
        REQUIRE(a.order() == b.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            REQUIRE(a.element(i) == b.element(i));
        }
    }
}

TEST_CASE("vertex cap refuses oversized graphs") {
    SearchOptions opts;
    opts.max_vertices = 16;
    const HGraph g(GraphParams{5, 3});
    CHECK_THROWS_AS(stabilizer_of_empty(g, opts), SearchLimitError);
}

TEST_CASE("element cap aborts degenerate explosions") {
    SearchOptions opts;
    opts.max_elements = 100;
    // k = 0 has no edges, so everything fixing the base is allowed: 7! maps.
    const HGraph g(GraphParams{3, 0});
    CHECK_THROWS_AS(stabilizer_of_empty(g, opts), SearchLimitError);
}

TEST_CASE("every stabilizer element passes the full automorphism check") {
    const HGraph g(GraphParams{5, 2});
    SearchOptions opts;  // verify_each defaults to true and would throw on failure
    const StabilizerResult stab = stabilizer_of_empty(g, opts);
    CHECK(stab.order() == 230400);
}

TEST_CASE("decomposition recovers translations and plain permutations") {
    const HGraph g(GraphParams{5, 3});
    {
        const SymmetryElement rho = SymmetryElement::translation_only(Subset::of(5, {2, 4}));
        const auto decomposed = decompose_known(to_vertex_map(rho, g), g);
        REQUIRE(decomposed.has_value());
        CHECK(decomposed->family() == Family::plain);
        CHECK(decomposed->translation_part() == Subset::of(5, {2, 4}));
        CHECK(decomposed->perm().is_identity());
    }
    {
        const Permutation sigma = Permutation::from_images({2, 1, 4, 3, 5});
        const SymmetryElement e = SymmetryElement::plain(Subset::of(5, {1}), sigma);
        const auto decomposed = decompose_known(to_vertex_map(e, g), g);
        REQUIRE(decomposed.has_value());
        CHECK(decomposed->family() == Family::plain);
        CHECK(decomposed->translation_part() == Subset::of(5, {1}));
        CHECK(decomposed->perm() == sigma);
    }
}

TEST_CASE("decomposition recovers extended elements exactly") {
    {
        const HGraph g(GraphParams{5, 3});
        const Permutation sigma = Permutation::transposition(6, 2, 6);
        const SymmetryElement e = SymmetryElement::extended_a(Subset::of(5, {3}), sigma);
        const auto decomposed = decompose_known(to_vertex_map(e, g), g);
        REQUIRE(decomposed.has_value());
        CHECK(decomposed->family() == Family::extended_a);
        CHECK(decomposed->translation_part() == Subset::of(5, {3}));
        CHECK(decomposed->perm() == sigma);
    }
    {
        const HGraph g(GraphParams{7, 3});
        const Permutation sigma = Permutation::transposition(8, 5, 8);
        const SymmetryElement e = SymmetryElement::extended_b(Subset::empty(7), sigma);
        const auto decomposed = decompose_known(to_vertex_map(e, g), g);
        REQUIRE(decomposed.has_value());
        CHECK(decomposed->family() == Family::extended_b);
        CHECK(decomposed->perm() == sigma);
    }
}

TEST_CASE("every stabilizer element of (5,3) lies in the extended family") {
    const HGraph g(GraphParams{5, 3});
    const StabilizerResult stab = stabilizer_of_empty(g);
    std::set<std::size_t> seen_ranks;
    for (std::size_t i = 0; i < stab.order(); ++i) {
        const auto decomposed = decompose_known(stab.element(i), g);
        REQUIRE(decomposed.has_value());
        REQUIRE(decomposed->translation_part().is_empty());
        // Promote plain recoveries into the extended indexing to check
        // uniqueness across the whole stabilizer.
        Permutation sigma = decomposed->perm();
        if (decomposed->family() == Family::plain) {
            std::vector<int> images = sigma.images();
            images.push_back(6);
            sigma = Permutation::from_images(std::move(images));
        }
        REQUIRE(seen_ranks.insert(permutation_rank(sigma)).second);
    }
    CHECK(seen_ranks.size() == 720);
}

TEST_CASE("component swaps at (3,2) are reported outside the known families") {
    const HGraph g(GraphParams{3, 2});
    const StabilizerResult stab = stabilizer_of_empty(g);
    std::size_t outside = 0;
    for (std::size_t i = 0; i < stab.order(); ++i) {
        if (!decompose_known(stab.element(i), g)) ++outside;
    }
    CHECK(outside > 0);
}

TEST_CASE("component stabilizers decompose as plain permutations") {
    const HGraph g(GraphParams{6, 2, Component::even});
    const StabilizerResult stab = stabilizer_of_empty(g);
    REQUIRE(stab.order() == 720);
    std::set<std::size_t> ranks;
    for (std::size_t i = 0; i < stab.order(); ++i) {
        const auto decomposed = decompose_known(stab.element(i), g);
        REQUIRE(decomposed.has_value());
        REQUIRE(decomposed->family() == Family::plain);
        ranks.insert(permutation_rank(decomposed->perm()));
    }
    CHECK(ranks.size() == 720);
}

TEST_CASE("odd-component maps decompose through the parity conjugation") {
    const HGraph g(GraphParams{6, 2, Component::odd});
    const Permutation sigma = Permutation::from_images({3, 1, 2, 4, 6, 5});
    const SymmetryElement e = SymmetryElement::plain(Subset::of(6, {2, 5}), sigma);
    const auto decomposed = decompose_known(to_vertex_map(e, g), g);
    REQUIRE(decomposed.has_value());
    CHECK(decomposed->perm() == sigma);
    CHECK(decomposed->translation_part() == Subset::of(6, {2, 5}));
}
