#include "hnk/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hnk {

Permutation::Permutation(int domain_size) {
    if (domain_size < 1 || domain_size > 20) {
        throw std::invalid_argument("permutation domain size must be in [1, 20]");
    }
    images_.resize(static_cast<std::size_t>(domain_size));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    Permutation p(m);
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : images) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("image table is not a bijection on {1,...," +
                                        std::to_string(m) + "}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int domain_size, int a, int b) {
    Permutation p(domain_size);
    if (a < 1 || a > domain_size || b < 1 || b > domain_size) {
        throw std::invalid_argument("transposition points outside the domain");
    }
    std::swap(p.images_[static_cast<std::size_t>(a - 1)],
              p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

int Permutation::apply(int x) const {
    if (x < 1 || x > domain_size()) {
        throw std::invalid_argument("point " + std::to_string(x) + " outside the domain");
    }
    return images_[static_cast<std::size_t>(x - 1)];
}

int Permutation::preimage(int y) const {
    if (y < 1 || y > domain_size()) {
        throw std::invalid_argument("point " + std::to_string(y) + " outside the domain");
    }
    for (int x = 1; x <= domain_size(); ++x) {
        if (images_[static_cast<std::size_t>(x - 1)] == y) return x;
    }
    throw std::logic_error("image table is not surjective");
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= domain_size(); ++x) {
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x - 1)] - 1)] = x;
    }
    return Permutation::from_images(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
    if (domain_size() != other.domain_size()) {
        throw std::invalid_argument("composing permutations with different domains");
    }
    std::vector<int> out(images_.size());
    for (int x = 1; x <= domain_size(); ++x) {
        out[static_cast<std::size_t>(x - 1)] = apply(other.apply(x));
    }
    return Permutation::from_images(std::move(out));
}

std::uint32_t Permutation::apply_bits(std::uint32_t mask) const {
    std::uint32_t out = 0;
    while (mask != 0) {
        const int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint32_t{1} << (images_[static_cast<std::size_t>(bit)] - 1);
    }
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (int x = 1; x <= domain_size(); ++x) {
        if (images_[static_cast<std::size_t>(x - 1)] != x) return false;
    }
    return true;
}

std::string Permutation::cycle_string() const {
    if (is_identity()) return "id";
    std::ostringstream os;
    std::vector<bool> done(images_.size(), false);
    for (int start = 1; start <= domain_size(); ++start) {
        if (done[static_cast<std::size_t>(start - 1)]) continue;
        int x = start;
        std::vector<int> cycle;
        do {
            done[static_cast<std::size_t>(x - 1)] = true;
            cycle.push_back(x);
            x = apply(x);
        } while (x != start);
        if (cycle.size() < 2) continue;
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i != 0) os << ' ';
            os << cycle[i];
        }
        os << ')';
    }
    return os.str();
}

std::vector<Permutation> all_permutations(int domain_size) {
    if (domain_size < 1 || domain_size > 10) {
        throw std::invalid_argument("refusing to materialize S_m beyond m = 10");
    }
    std::vector<int> images(static_cast<std::size_t>(domain_size));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Permutation random_permutation(int domain_size, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(domain_size));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = images.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(images[i - 1], images[pick(rng)]);
    }
    return Permutation::from_images(std::move(images));
}

std::size_t permutation_rank(const Permutation& p) {
    const auto& img = p.images();
    const std::size_t m = img.size();
    std::size_t rank = 0;
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= m; ++i) factorial *= i;
    for (std::size_t i = 0; i < m; ++i) {
        factorial /= (m - i);
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (img[j] < img[i]) ++smaller;
        }
        rank += smaller * factorial;
    }
    return rank;
}

}  // namespace hnk
