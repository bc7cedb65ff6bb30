#pragma once

#include <cstdint>
#include <vector>

namespace hnk {

class HGraph;

/// An arbitrary bijection on a graph's vertex set, stored as an image table
/// over vertex indices. This is the common currency between the structured
/// symmetry constructions and the brute-force search: both sides can be
/// flattened to a VertexMap and compared entry by entry.
class VertexMap {
public:
    VertexMap() = default;

    /// Identity on a vertex set of the given size.
    explicit VertexMap(int vertex_count);

    /// Takes ownership of an image table; validates that it is a bijection.
    static VertexMap from_images(std::vector<std::uint16_t> images);

    int vertex_count() const noexcept { return static_cast<int>(images_.size()); }
    int apply(int index) const { return images_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::uint16_t>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    VertexMap inverse() const;

    /// this after other: apply other first.
    VertexMap after(const VertexMap& other) const;

    bool operator==(const VertexMap& other) const = default;

private:
    std::vector<std::uint16_t> images_;
};

/// True when the table is a bijection (every image hit exactly once).
/// On failure reports a colliding pair via the out parameters.
bool is_bijection(const std::vector<std::uint16_t>& images, int* collision_a = nullptr,
                  int* collision_b = nullptr);

}  // namespace hnk
