#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnk/subset.hpp"

namespace hnk {

/// Which induced subgraph to build: the full vertex set, or the sets of
/// odd/even cardinality. The parity subgraphs are the connected components
/// when k is even; requesting them for odd k is a usage error because the
/// induced subgraphs carry no edges there.
enum class Component { whole, odd, even };

std::string to_string(Component c);
Component component_from_string(const std::string& s);

struct GraphParams {
    int n = 1;
    int k = 0;
    Component component = Component::whole;
};

/// The graph on subsets of {1,...,n} where two sets are adjacent exactly
/// when their symmetric difference has k elements. Vertices are kept as
/// encoded masks in ascending order; adjacency is answered from popcounts,
/// and an adjacency-list cache is built on demand for n <= 12 so the two
/// representations can be cross-checked.
class HGraph {
public:
    explicit HGraph(GraphParams params);

    const GraphParams& params() const noexcept { return params_; }
    int n() const noexcept { return params_.n; }
    int k() const noexcept { return params_.k; }
    Component component() const noexcept { return params_.component; }

    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    std::uint32_t vertex_mask(int index) const { return vertices_.at(static_cast<std::size_t>(index)); }
    Subset vertex(int index) const { return Subset(params_.n, vertex_mask(index)); }

    /// Index of a mask in the vertex list, or -1 when the mask is not a
    /// vertex (wrong parity under a component filter).
    int index_of_mask(std::uint32_t mask) const;
    bool contains_mask(std::uint32_t mask) const { return index_of_mask(mask) >= 0; }
    int index_of(const Subset& x) const;

    bool adjacent_masks(std::uint32_t x, std::uint32_t y) const noexcept;
    bool adjacent(int a, int b) const;

    /// Neighbor indices in ascending mask order.
    std::vector<int> neighbors(int index) const;
    int degree(int index) const;
    std::size_t edge_count() const;

    /// The masks of weight k; XOR-ing a vertex with each of these walks its
    /// neighborhood.
    const std::vector<std::uint32_t>& weight_k_deltas() const noexcept { return deltas_; }

    /// Canonical base vertex: the empty set for whole/even graphs, {1} for
    /// the odd component. Always index 0.
    int base_vertex() const noexcept { return 0; }

    /// Rebuilds the adjacency lists from scratch and compares them with the
    /// popcount oracle pair by pair. Throws std::logic_error on mismatch.
    /// Only available for n <= 12 (where the cache exists).
    void validate_adjacency_representations() const;

private:
    const std::vector<std::vector<int>>& adjacency_lists() const;

    GraphParams params_;
    std::vector<std::uint32_t> vertices_;
    std::vector<std::int32_t> index_of_;
    std::vector<std::uint32_t> deltas_;
    mutable std::vector<std::vector<int>> adjacency_cache_;
};

HGraph build_graph(GraphParams params);

/// Connected components as lists of vertex indices (each list ascending,
/// lists ordered by smallest member).
std::vector<std::vector<int>> connected_components(const HGraph& g);

/// BFS distances from a source vertex index; unreachable vertices get -1.
std::vector<int> bfs_distances(const HGraph& g, int source);

struct DistanceClasses {
    Subset source;
    /// classes[i] holds the vertices at distance i, ascending; classes[0]
    /// is the source itself. Unreachable vertices are excluded.
    std::vector<std::vector<Subset>> classes;
    int eccentricity = 0;
};

DistanceClasses distance_classes(const HGraph& g, const Subset& source);

/// Exact diameter of a connected graph. Distances here are invariant under
/// XOR translation, so the eccentricity of the base vertex is the diameter;
/// a disconnected graph raises std::invalid_argument directing the caller
/// to a parity component.
int diameter(const HGraph& g);

struct PredictedDiameter {
    bool covered = false;
    int value = -1;
    std::string case_tag;  // "odd-k-wide", "odd-k-narrow", "component-k2", "component-k-n-1", or why not covered
};

/// Closed-form diameter where one is known: odd k in both regimes, and the
/// parity components for k = 2 and k = n-1 (odd n).
PredictedDiameter predicted_diameter(int n, int k, Component component = Component::whole);

struct ParityIsomorphismWitness {
    Subset translator;                 ///< odd set T; X -> T xor X
    std::size_t edges_checked = 0;
    std::vector<std::uint32_t> image_of_mask;  ///< indexed by odd-vertex mask, dense over 2^n
};

/// Confirms pointwise that translation by a fixed odd set maps the
/// odd-parity graph onto the even-parity graph, edge for edge. Requires
/// even k; a failed check throws std::logic_error (it would falsify the
/// component-isomorphism structure of the family).
ParityIsomorphismWitness parity_isomorphism_check(int n, int k,
                                                  std::optional<Subset> translator = std::nullopt);

struct ComplementIsomorphismWitness {
    std::size_t edges_checked = 0;
    std::vector<std::uint32_t> image_of_mask;  ///< X -> X for even |X|, X -> complement for odd |X|
};

/// Verifies the parity-conditional complement map as an isomorphism from
/// the (n,k) graph to the (n,n-k) graph; requires n even, k odd. The map
/// is checked exhaustively, not assumed.
ComplementIsomorphismWitness complement_isomorphism_check(int n, int k);

}  // namespace hnk
