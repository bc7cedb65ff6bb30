#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hnk {

/// A permutation of {1,...,m} stored as an image table. Immutable after
/// construction and validated to be a bijection.
class Permutation {
public:
    /// Identity on {1,...,m}.
    explicit Permutation(int domain_size);

    static Permutation identity(int domain_size) { return Permutation(domain_size); }

    /// images[i-1] is the image of i; must be a bijection on {1,...,m}.
    static Permutation from_images(std::vector<int> images);

    /// The transposition (a b) in S_m (a == b gives the identity).
    static Permutation transposition(int domain_size, int a, int b);

    int domain_size() const noexcept { return static_cast<int>(images_.size()); }

    int apply(int x) const;
    int preimage(int y) const;

    Permutation inverse() const;

    /// Function composition: (*this after other)(x) = this(other(x)).
    Permutation after(const Permutation& other) const;

    /// Element-wise image of a set given as a bit mask over the domain.
    std::uint32_t apply_bits(std::uint32_t mask) const;

    const std::vector<int>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    /// Cycle notation, e.g. "(1 6)(2 4)"; the identity prints "id".
    std::string cycle_string() const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

/// All m! permutations of {1,...,m} in lexicographic image-table order.
std::vector<Permutation> all_permutations(int domain_size);

/// Uniformly random permutation (Fisher-Yates over the given engine).
Permutation random_permutation(int domain_size, std::mt19937_64& rng);

/// Lexicographic rank of the image table among all m! permutations.
std::size_t permutation_rank(const Permutation& p);

}  // namespace hnk
