#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hnk/hgraph.hpp"
#include "hnk/symmetry.hpp"
#include "hnk/vertex_map.hpp"

namespace hnk {

/// Raised when a search would exceed the configured vertex or element caps.
class SearchLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    std::size_t max_vertices = 256;
    std::size_t max_elements = 1u << 20;
    /// Explore candidate images in descending instead of ascending order.
    /// The sorted result must not depend on this; it exists so tests can
    /// check order-independence.
    bool reverse_branching = false;
    /// Re-verify every found map with the exhaustive pair check.
    bool verify_each = true;
};

/// The complete point stabilizer of the base vertex, materialized as a flat
/// list of image tables sorted lexicographically.
class StabilizerResult {
public:
    StabilizerResult(int vertex_count, std::vector<std::uint16_t> flat,
                     std::vector<int> refinement);

    int vertex_count() const noexcept { return vertex_count_; }
    std::uint64_t order() const noexcept {
        return static_cast<std::uint64_t>(flat_.size() / static_cast<std::size_t>(vertex_count_));
    }
    VertexMap element(std::size_t i) const;
    /// Image of vertex v under element i, without materializing a VertexMap.
    int image(std::size_t i, int v) const {
        return flat_[i * static_cast<std::size_t>(vertex_count_) + static_cast<std::size_t>(v)];
    }
    bool contains(const VertexMap& m) const;

    /// The vertex partition (one color id per vertex) that seeded the
    /// search: distance classes from the base refined by neighbor-color
    /// multisets to a fixpoint.
    const std::vector<int>& invariant_signature() const noexcept { return refinement_; }

    /// Post-hoc group axioms: identity present, closed under inverse and
    /// under composition (all pairs when order^2 <= pair_limit, otherwise a
    /// deterministic stride sample).
    bool closed_under_group_ops(std::size_t pair_limit = 4'000'000) const;

private:
    int vertex_count_;
    std::vector<std::uint16_t> flat_;
    std::vector<int> refinement_;
};

/// The vertex partition used to seed and prune the search: distance classes
/// from the base vertex, refined by neighbor-color multisets to a fixpoint.
/// Every automorphism that fixes the base preserves these colors, so they
/// also serve as cheap orbit-separation certificates.
std::vector<int> base_refinement_colors(const HGraph& g);

/// Exhaustive backtracking search for every adjacency-preserving bijection
/// fixing the base vertex (the empty set on whole/even graphs). Pruning
/// uses only graph-intrinsic invariants: distance-from-base classes refined
/// by neighbor-class multisets. Disconnected whole graphs are searched in
/// full, so maps that permute the components are found.
StabilizerResult stabilizer_of_empty(const HGraph& g, const SearchOptions& opts = {});

/// Confirms that the translations realize the full orbit of the base
/// vertex: each one is built explicitly and run through the exhaustive
/// automorphism check. Throws std::logic_error if any translation fails.
void verify_translation_orbit(const HGraph& g);

struct AutOrderResult {
    std::uint64_t order = 0;
    std::uint64_t orbit_size = 0;
    std::uint64_t stabilizer_order = 0;
};

/// |Aut| = orbit(base) * stabilizer(base). The orbit is the whole vertex
/// set because translations act transitively; this is re-verified via
/// verify_translation_orbit rather than assumed.
AutOrderResult aut_order_detail(const HGraph& g, const SearchOptions& opts = {});
std::uint64_t aut_order(const HGraph& g, const SearchOptions& opts = {});

/// Tries to express a verified automorphism as translation-then-action in
/// one of the known families (plain, extended-A, extended-B). Returns the
/// structured element, or nullopt when the map lies outside every known
/// construction (a finding worth reporting, not an error).
std::optional<SymmetryElement> decompose_known(const VertexMap& m, const HGraph& g);

}  // namespace hnk
