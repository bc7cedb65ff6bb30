#include "hnk/vertex_map.hpp"

#include <numeric>
#include <stdexcept>

namespace hnk {

VertexMap::VertexMap(int vertex_count) {
    if (vertex_count < 1 || vertex_count > 65536) {
        throw std::invalid_argument("vertex count must be in [1, 65536]");
    }
    images_.resize(static_cast<std::size_t>(vertex_count));
    std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

VertexMap VertexMap::from_images(std::vector<std::uint16_t> images) {
    int a = -1, b = -1;
    if (!is_bijection(images, &a, &b)) {
        throw std::invalid_argument("image table is not a bijection (vertices " +
                                    std::to_string(a) + " and " + std::to_string(b) +
                                    " collide)");
    }
    VertexMap m;
    m.images_ = std::move(images);
    return m;
}

bool VertexMap::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

VertexMap VertexMap::inverse() const {
    std::vector<std::uint16_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<std::uint16_t>(i);
    }
    return VertexMap::from_images(std::move(inv));
}

VertexMap VertexMap::after(const VertexMap& other) const {
    if (vertex_count() != other.vertex_count()) {
        throw std::invalid_argument("composing vertex maps over different vertex sets");
    }
    std::vector<std::uint16_t> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out[i] = images_[other.images_[i]];
    }
    return VertexMap::from_images(std::move(out));
}

bool is_bijection(const std::vector<std::uint16_t>& images, int* collision_a, int* collision_b) {
    std::vector<int> source_of(images.size(), -1);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const std::uint16_t img = images[i];
        if (img >= images.size()) {
            if (collision_a) *collision_a = static_cast<int>(i);
            if (collision_b) *collision_b = -1;
            return false;
        }
        if (source_of[img] >= 0) {
            if (collision_a) *collision_a = source_of[img];
            if (collision_b) *collision_b = static_cast<int>(i);
            return false;
        }
        source_of[img] = static_cast<int>(i);
    }
    return true;
}

}  // namespace hnk
