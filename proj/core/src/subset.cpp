#include "hnk/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hnk {

namespace {

void check_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSize) {
        throw std::invalid_argument("ground size must be in [1, " +
                                    std::to_string(kMaxGroundSize) + "], got " +
                                    std::to_string(n));
    }
}

}  // namespace

Subset::Subset(int ground_size, std::uint32_t bits) : bits_(bits), n_(ground_size) {
    check_ground_size(ground_size);
    if (bits >> ground_size) {
        throw std::invalid_argument("subset encoding has bits above position " +
                                    std::to_string(ground_size - 1));
    }
}

Subset Subset::full(int ground_size) {
    check_ground_size(ground_size);
    return Subset(ground_size, (std::uint32_t{1} << ground_size) - 1);
}

Subset Subset::of(int ground_size, std::initializer_list<int> elements) {
    check_ground_size(ground_size);
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > ground_size) {
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " outside ground set [" + std::to_string(ground_size) + "]");
        }
        bits |= std::uint32_t{1} << (e - 1);
    }
    return Subset(ground_size, bits);
}

Subset Subset::singleton(int ground_size, int element) {
    return Subset::of(ground_size, {element});
}

int Subset::weight() const noexcept { return std::popcount(bits_); }

bool Subset::contains(int element) const {
    if (element < 1 || element > n_) {
        throw std::invalid_argument("element " + std::to_string(element) +
                                    " outside ground set [" + std::to_string(n_) + "]");
    }
    return (bits_ >> (element - 1)) & 1u;
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(weight()));
    for (int e = 1; e <= n_; ++e) {
        if ((bits_ >> (e - 1)) & 1u) out.push_back(e);
    }
    return out;
}

Subset Subset::complement() const noexcept {
    return Subset(n_, bits_ ^ ((std::uint32_t{1} << n_) - 1));
}

Subset Subset::with(int element) const {
    Subset probe = Subset::singleton(n_, element);
    return Subset(n_, bits_ | probe.bits());
}

Subset Subset::without(int element) const {
    Subset probe = Subset::singleton(n_, element);
    return Subset(n_, bits_ & ~probe.bits());
}

int weight(const Subset& x) noexcept { return x.weight(); }

Subset symmetric_difference(const Subset& x, const Subset& y) {
    if (x.ground_size() != y.ground_size()) {
        throw std::invalid_argument("symmetric difference of subsets with different ground sizes (" +
                                    std::to_string(x.ground_size()) + " vs " +
                                    std::to_string(y.ground_size()) + ")");
    }
    return Subset(x.ground_size(), x.bits() ^ y.bits());
}

Subset complement(const Subset& x) noexcept { return x.complement(); }

std::vector<Subset> subsets_of_size(int ground_size, int size) {
    check_ground_size(ground_size);
    if (size < 0 || size > ground_size) {
        throw std::invalid_argument("subset size " + std::to_string(size) +
                                    " outside [0, " + std::to_string(ground_size) + "]");
    }
    std::vector<Subset> out;
    if (size == 0) {
        out.push_back(Subset::empty(ground_size));
        return out;
    }
    // Gosper's hack: next encoding with the same popcount, ascending.
    std::uint32_t v = (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << ground_size;
    while (v < limit) {
        out.push_back(Subset(ground_size, v));
        std::uint32_t low = v & (~v + 1);
        std::uint32_t ripple = v + low;
        v = ripple | (((v ^ ripple) >> 2) / low);
    }
    return out;
}

std::string to_string(const Subset& x) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : x.elements()) {
        if (!first) os << ',';
        first = false;
        os << e;
    }
    os << '}';
    return os.str();
}

std::string subset_text(std::uint32_t bits) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e = 1; e <= 32; ++e) {
        if ((bits >> (e - 1)) & 1u) {
            if (!first) os << ',';
            first = false;
            os << e;
        }
    }
    os << '}';
    return os.str();
}

}  // namespace hnk
