#include "hnk/counts.hpp"

#include <bit>
#include <stdexcept>

namespace hnk {

BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (a < 0) throw std::invalid_argument("binomial with negative upper argument");
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;  // exact at every step: a prefix of a binomial
    }
    return result;
}

std::string to_string(SequenceFamily f) {
    switch (f) {
        case SequenceFamily::u_2km1: return "u-2km1";
        case SequenceFamily::u_2kp1: return "u-2kp1";
        case SequenceFamily::u_general: return "u-general";
        case SequenceFamily::v_general: return "v-general";
    }
    return "?";
}

SequenceFamily sequence_family_from_string(const std::string& s) {
    if (s == "u-2km1") return SequenceFamily::u_2km1;
    if (s == "u-2kp1") return SequenceFamily::u_2kp1;
    if (s == "u-general") return SequenceFamily::u_general;
    if (s == "v-general") return SequenceFamily::v_general;
    throw std::invalid_argument("unknown sequence family '" + s +
                                "' (expected u-2km1|u-2kp1|u-general|v-general)");
}

const BigInt& SequenceTable::at(int index) const {
    if (index < first_index || index > last_index()) {
        throw std::invalid_argument("sequence index " + std::to_string(index) +
                                    " outside [" + std::to_string(first_index) + ", " +
                                    std::to_string(last_index()) + "]");
    }
    return values[static_cast<std::size_t>(index - first_index)];
}

SequenceTable u_sequence(SequenceFamily family, int k, std::optional<int> n_opt) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    SequenceTable t;
    t.family = family;
    t.k = k;
    switch (family) {
        case SequenceFamily::u_2km1: {
            if (n_opt && *n_opt != 2 * k - 1) {
                throw std::invalid_argument("u-2km1 is defined at n = 2k-1");
            }
            t.n = 2 * k - 1;
            t.first_index = 1;
            for (int m = 1; m <= k - 1; ++m) {
                t.values.push_back(binomial(2 * m, m) * binomial(2 * k - 2 * m - 1, k - m));
            }
            break;
        }
        case SequenceFamily::u_2kp1: {
            if (n_opt && *n_opt != 2 * k + 1) {
                throw std::invalid_argument("u-2kp1 is defined at n = 2k+1");
            }
            t.n = 2 * k + 1;
            t.first_index = 1;
            for (int m = 1; m <= k; ++m) {
                t.values.push_back(binomial(2 * m, m) * binomial(2 * k - 2 * m + 1, k - m));
            }
            break;
        }
        case SequenceFamily::u_general: {
            if (!n_opt) throw std::invalid_argument("u-general requires n");
            t.n = *n_opt;
            if (t.n < k + 1) throw std::invalid_argument("u-general requires n > k");
            t.first_index = 1;
            for (int p = 1; p <= k - 1; ++p) {
                t.values.push_back(binomial(2 * p, p) * binomial(t.n - 2 * p, k - p));
            }
            break;
        }
        case SequenceFamily::v_general: {
            if (!n_opt) throw std::invalid_argument("v-general requires n");
            t.n = *n_opt;
            if (t.n < k + 1) throw std::invalid_argument("v-general requires n > k");
            t.first_index = 0;
            for (int p = 0; p <= k - 1; ++p) {
                t.values.push_back(binomial(2 * p + 2, p + 1) * binomial(t.n - 2 * p - 2, k - p - 1));
            }
            break;
        }
    }
    return t;
}

namespace {

MonotonicityVerdict check_strict_decrease(const SequenceTable& t, int from, int to,
                                          const std::string& window) {
    MonotonicityVerdict v;
    v.window = window;
    v.ok = true;
    for (int i = from; i < to; ++i) {
        if (!(t.at(i) > t.at(i + 1))) {
            v.ok = false;
            v.first_violation = i;
            return v;
        }
    }
    return v;
}

}  // namespace

MonotonicityVerdict monotonicity_check(const SequenceTable& t) {
    const int k = t.k;
    switch (t.family) {
        case SequenceFamily::u_2km1: {
            // Strictly decreasing up to the midpoint (k-1)/2, mirrored
            // increase after it, equal neighbors at the midpoint for odd k.
            MonotonicityVerdict v;
            v.window = "decreasing on m < (k-1)/2, equal at the odd-k midpoint, increasing after";
            v.ok = true;
            for (int m = 1; m <= k - 2; ++m) {
                // ratio > 1 iff 2m < k-1; = 1 iff 2m = k-1; < 1 iff 2m > k-1
                if (2 * m < k - 1 && !(t.at(m) > t.at(m + 1))) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
                if (2 * m > k - 1 && !(t.at(m) < t.at(m + 1))) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
                if (2 * m == k - 1 && t.at(m) != t.at(m + 1)) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
            }
            for (int m = 1; m <= k - 1; ++m) {
                if (t.at(m) != t.at(k - m)) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
            }
            return v;
        }
        case SequenceFamily::u_2kp1: {
            MonotonicityVerdict v;
            v.window = "decreasing on m < k/2, equal at the even-k midpoint, increasing after";
            v.ok = true;
            for (int m = 1; m <= k - 1; ++m) {
                // ratio > 1 iff 2m < k; = 1 iff 2m = k; < 1 iff 2m > k
                if (2 * m < k && !(t.at(m) > t.at(m + 1))) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
                if (2 * m > k && !(t.at(m) < t.at(m + 1))) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
                if (2 * m == k && t.at(m) != t.at(m + 1)) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
            }
            for (int m = 1; m <= k; ++m) {
                if (t.at(m) != t.at(k - m + 1)) {
                    v.ok = false;
                    v.first_violation = m;
                    return v;
                }
            }
            return v;
        }
        case SequenceFamily::u_general: {
            // Strict decrease on p = 1 .. (k-3)/2 requires n >= 2k+2; the
            // window may be empty for small k, which passes vacuously.
            const int hi = (k - 3) / 2;
            if (t.n < 2 * k + 2 || hi < 1) {
                MonotonicityVerdict v;
                v.ok = true;
                v.window = "empty window";
                return v;
            }
            return check_strict_decrease(t, 1, hi + 1,
                                         "strictly decreasing on p = 1 .. (k-3)/2 + 1");
        }
        case SequenceFamily::v_general: {
            const int hi = (k - 3) / 2;
            if (t.n < 2 * k + 2 || hi < 0) {
                MonotonicityVerdict v;
                v.ok = true;
                v.window = "empty window";
                return v;
            }
            return check_strict_decrease(t, 0, hi,
                                         "strictly decreasing on p = 0 .. (k-3)/2");
        }
    }
    throw std::logic_error("unreachable family");
}

long long neighbor_count_bruteforce(const HGraph& g, const Subset& x,
                                    std::optional<int> restrict_to_size) {
    const int idx = g.index_of(x);
    if (idx < 0) throw std::invalid_argument("subset is not a vertex of this graph");
    long long count = 0;
    for (int u : g.neighbors(idx)) {
        if (!restrict_to_size || g.vertex(u).weight() == *restrict_to_size) ++count;
    }
    return count;
}

long long common_neighbor_count_bruteforce(const HGraph& g, const Subset& x, const Subset& y,
                                           std::optional<int> restrict_to_size) {
    const int ix = g.index_of(x);
    const int iy = g.index_of(y);
    if (ix < 0 || iy < 0) throw std::invalid_argument("subset is not a vertex of this graph");
    if (ix == iy) return neighbor_count_bruteforce(g, x, restrict_to_size);
    long long count = 0;
    const std::uint32_t mx = x.bits();
    const std::uint32_t my = y.bits();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t mv = g.vertex_mask(v);
        if (!g.adjacent_masks(mv, mx) || !g.adjacent_masks(mv, my)) continue;
        if (restrict_to_size && std::popcount(mv) != *restrict_to_size) continue;
        ++count;
    }
    return count;
}

BigInt odd_size_upper_neighbor_count(int k, int m) {
    return binomial(2 * m - 1, m) * binomial(2 * k - 2 * m + 2, k - m + 1);
}

BigInt odd_size_upper_neighbor_count_variant(int k, int m) {
    return binomial(2 * m - 1, m) * binomial(2 * k + 2 * m + 2, k - m + 1);
}

}  // namespace hnk
