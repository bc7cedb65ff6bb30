#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hnk {

/// Largest supported ground-set size. Keeps every exhaustive operation
/// (2^n vertices, adjacency sweeps) comfortably in memory.
inline constexpr int kMaxGroundSize = 16;

/// A subset of {1,...,n} stored as a bit vector: bit i-1 set <=> element i
/// present. The encoding is exactly the characteristic vector of the set,
/// so XOR of encodings is the symmetric difference and popcount is the
/// cardinality. Values are immutable; all operations are pure.
class Subset {
public:
    Subset(int ground_size, std::uint32_t bits);

    static Subset empty(int ground_size) { return Subset(ground_size, 0); }
    static Subset full(int ground_size);
    static Subset of(int ground_size, std::initializer_list<int> elements);
    static Subset singleton(int ground_size, int element);

    int ground_size() const noexcept { return n_; }
    std::uint32_t bits() const noexcept { return bits_; }

    /// Cardinality |X| (Hamming weight of the encoding).
    int weight() const noexcept;

    /// Membership test, 1-based element.
    bool contains(int element) const;

    /// Elements in ascending order.
    std::vector<int> elements() const;

    /// [n] \ X.
    Subset complement() const noexcept;

    Subset with(int element) const;
    Subset without(int element) const;

    bool is_empty() const noexcept { return bits_ == 0; }

    bool operator==(const Subset& other) const = default;

private:
    std::uint32_t bits_;
    int n_;
};

/// |X|.
int weight(const Subset& x) noexcept;

/// X triangle Y; both arguments must share the same ground size.
Subset symmetric_difference(const Subset& x, const Subset& y);

/// [n] \ X.
Subset complement(const Subset& x) noexcept;

inline Subset operator^(const Subset& x, const Subset& y) {
    return symmetric_difference(x, y);
}

/// All C(n,s) subsets of the given size in ascending encoded order.
std::vector<Subset> subsets_of_size(int ground_size, int size);

/// Text form used by the CLI and exports: "{1,3,5}"; the empty set is "{}".
std::string to_string(const Subset& x);

/// Text form of a raw encoding, for callers that carry masks directly.
std::string subset_text(std::uint32_t bits);

}  // namespace hnk
