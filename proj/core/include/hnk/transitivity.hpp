#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hnk/autsearch.hpp"
#include "hnk/hgraph.hpp"

namespace hnk {

/// A shortest path recorded as vertex indices; vertices[0] is the start and
/// every prefix realizes the distance to its endpoint.
struct GeodesicPath {
    std::vector<int> vertices;
    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

struct GeodesicEnumeration {
    std::vector<GeodesicPath> paths;
    std::string note;  ///< set when the request exceeded the source's eccentricity
};

/// All geodesics of length exactly s starting at the source, in
/// lexicographic vertex-sequence order. Enumeration is exhaustive; if more
/// than path_cap paths would be produced the call refuses (throws
/// SearchLimitError) rather than sampling.
GeodesicEnumeration enumerate_geodesics(const HGraph& g, int source, int s,
                                        std::size_t path_cap = 10'000'000);

struct GeodesicOrbitSummary {
    int s = 0;
    std::size_t geodesic_count = 0;
    std::size_t orbit_count = 0;
    /// One representative per orbit (at most a handful are kept).
    std::vector<GeodesicPath> representatives;
};

struct STransitivityResult {
    bool transitive = false;     ///< single stabilizer orbit at every length 1..s
    std::vector<GeodesicOrbitSummary> per_length;
};

/// Whether the base-vertex stabilizer acts with a single orbit on the
/// i-geodesics from the base for every i <= s. The stabilizer comes from
/// the brute-force search, not from the structured constructions, so
/// negative verdicts are unconditional.
STransitivityResult is_s_geodesic_transitive(const HGraph& g, int s, const StabilizerResult& stab);
STransitivityResult is_s_geodesic_transitive(const HGraph& g, int s,
                                             const SearchOptions& opts = {});

struct GeodesicInvariantClasses {
    int s = 0;
    std::size_t geodesic_count = 0;
    std::size_t class_count = 0;
    std::vector<GeodesicPath> representatives;  ///< one per class, up to a handful
};

/// Partitions the base-vertex s-geodesics by the refinement-color signature
/// along the path. Every base-fixing automorphism preserves the colors, so
/// two classes certify two stabilizer orbits without materializing any
/// group element. Useful when the stabilizer itself is too large to
/// enumerate (the n = 2k graphs have twin vertices and enormous groups).
/// A single class proves nothing.
GeodesicInvariantClasses geodesic_invariant_classes(const HGraph& g, int s,
                                                    std::size_t path_cap = 10'000'000);

/// Arc-transitivity certified by explicit witnesses instead of the full
/// stabilizer: translations realize vertex-transitivity, and for every
/// neighbor of the base an explicit ground-set relabeling is built, checked
/// as an automorphism, and shown to map the first arc onto it.
bool arc_transitive_via_witnesses(const HGraph& g);

/// Vertex-transitivity via translations plus a single stabilizer orbit on
/// the base vertex's neighbors.
bool is_arc_transitive(const HGraph& g, const StabilizerResult& stab);
bool is_arc_transitive(const HGraph& g, const SearchOptions& opts = {});

enum class GeodesicClass { geodesic_transitive, not_two_geodesic_transitive, unclassified };

std::string to_string(GeodesicClass c);

/// The known classification: k in {1,2} and k = n-1 are geodesic
/// transitive, as are the exceptional (5,3), (6,4), (7,4); every other
/// k >= 3 with n != k+1 fails already at 2-geodesics.
GeodesicClass classify_geodesic_transitivity(int n, int k);

struct TransitivityVerdict {
    bool arc_transitive = false;
    std::map<int, bool> s_transitive;  ///< cumulative per length, 1..diameter
    bool geodesic_transitive = false;
    int max_transitive_s = 0;
};

/// Runs the empirical checks up to the graph's diameter.
TransitivityVerdict full_transitivity(const HGraph& g, const StabilizerResult& stab);
TransitivityVerdict full_transitivity(const HGraph& g, const SearchOptions& opts = {});

}  // namespace hnk
