#include "hnk/autsearch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hnk {

namespace {

// Packed adjacency rows, one bitset row per vertex.
struct AdjBits {
    int vertex_count = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    explicit AdjBits(const HGraph& g)
        : vertex_count(g.vertex_count()), words((g.vertex_count() + 63) / 64) {
        rows.assign(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(words), 0);
        for (int v = 0; v < vertex_count; ++v) {
            for (int u : g.neighbors(v)) {
                rows[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(u / 64)] |=
                    std::uint64_t{1} << (u % 64);
            }
        }
    }

    const std::uint64_t* row(int v) const {
        return rows.data() + static_cast<std::size_t>(v) * words;
    }
    bool get(int a, int b) const { return (row(a)[b / 64] >> (b % 64)) & 1u; }
};

}  // namespace

// Only graph-intrinsic invariants are used here: vertex weight would be
// illegal, since weights are not preserved by every automorphism of this
// family.
std::vector<int> base_refinement_colors(const HGraph& g) {
    const int v_count = g.vertex_count();
    std::vector<int> colors = bfs_distances(g, g.base_vertex());
    for (int& c : colors) {
        if (c < 0) c = v_count;  // unreachable vertices share a sentinel layer
    }
    std::size_t cell_count = 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> signature_of(
            static_cast<std::size_t>(v_count));
        for (int v = 0; v < v_count; ++v) {
            std::vector<int> sig;
            sig.push_back(colors[static_cast<std::size_t>(v)]);
            std::vector<int> nbr;
            for (int u : g.neighbors(v)) nbr.push_back(colors[static_cast<std::size_t>(u)]);
            std::sort(nbr.begin(), nbr.end());
            sig.insert(sig.end(), nbr.begin(), nbr.end());
            signature_of[static_cast<std::size_t>(v)] = {std::move(sig), v};
        }
        std::map<std::vector<int>, int> relabel;
        for (const auto& [sig, v] : signature_of) relabel.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, id] : relabel) id = next++;
        for (const auto& [sig, v] : signature_of) {
            colors[static_cast<std::size_t>(v)] = relabel.at(sig);
        }
        if (relabel.size() == cell_count) break;
        cell_count = relabel.size();
    }
    return colors;
}

namespace {

struct Searcher {
    const HGraph& graph;
    const SearchOptions& opts;
    AdjBits adj;
    std::vector<int> colors;
    std::vector<int> order;  // vertex visit order, base first
    std::vector<int> image;  // image[v] for assigned vertices, else -1
    std::vector<std::uint64_t> used;
    std::vector<std::uint64_t> color_mask;
    std::vector<std::uint16_t> found;
    std::size_t found_count = 0;

    Searcher(const HGraph& g, const SearchOptions& o) : graph(g), opts(o), adj(g) {
        colors = base_refinement_colors(g);
        const int v_count = g.vertex_count();
        order.resize(static_cast<std::size_t>(v_count));
        std::iota(order.begin(), order.end(), 0);
        // BFS-layer order binds adjacency constraints to already-placed
        // vertices as early as possible.
        std::vector<int> layer = bfs_distances(g, g.base_vertex());
        for (int& d : layer) {
            if (d < 0) d = v_count;
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return layer[static_cast<std::size_t>(a)] < layer[static_cast<std::size_t>(b)];
        });
        image.assign(static_cast<std::size_t>(v_count), -1);
        used.assign(static_cast<std::size_t>(adj.words), 0);
        const int color_count = *std::max_element(colors.begin(), colors.end()) + 1;
        color_mask.assign(static_cast<std::size_t>(color_count) * adj.words, 0);
        for (int v = 0; v < v_count; ++v) {
            color_mask[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)]) * adj.words +
                       static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
        }
    }

    void record() {
        if (found_count >= opts.max_elements) {
            throw SearchLimitError("stabilizer exceeds the element cap of " +
                                   std::to_string(opts.max_elements) +
                                   " maps; raise SearchOptions::max_elements to continue");
        }
        for (int v = 0; v < graph.vertex_count(); ++v) {
            found.push_back(static_cast<std::uint16_t>(image[static_cast<std::size_t>(v)]));
        }
        ++found_count;
    }

    void search(int depth) {
        const int v_count = graph.vertex_count();
        if (depth == v_count) {
            record();
            return;
        }
        const int v = order[static_cast<std::size_t>(depth)];
        // Candidates: same refinement color, unused, adjacency to every
        // placed vertex matching the preimage side.
        std::vector<std::uint64_t> cand(static_cast<std::size_t>(adj.words));
        const std::uint64_t* cm =
            color_mask.data() +
            static_cast<std::size_t>(colors[static_cast<std::size_t>(v)]) * adj.words;
        for (int w = 0; w < adj.words; ++w) {
            cand[static_cast<std::size_t>(w)] = cm[w] & ~used[static_cast<std::size_t>(w)];
        }
        for (int i = 0; i < depth; ++i) {
            const int placed = order[static_cast<std::size_t>(i)];
            const std::uint64_t* row = adj.row(image[static_cast<std::size_t>(placed)]);
            if (adj.get(v, placed)) {
                for (int w = 0; w < adj.words; ++w) cand[static_cast<std::size_t>(w)] &= row[w];
            } else {
                for (int w = 0; w < adj.words; ++w) cand[static_cast<std::size_t>(w)] &= ~row[w];
            }
        }
        std::vector<int> targets;
        for (int w = 0; w < adj.words; ++w) {
            std::uint64_t bits = cand[static_cast<std::size_t>(w)];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                targets.push_back(w * 64 + b);
            }
        }
        if (opts.reverse_branching) std::reverse(targets.begin(), targets.end());
        for (int u : targets) {
            image[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u / 64)] |= std::uint64_t{1} << (u % 64);
            search(depth + 1);
            used[static_cast<std::size_t>(u / 64)] &= ~(std::uint64_t{1} << (u % 64));
            image[static_cast<std::size_t>(v)] = -1;
        }
    }
};

}  // namespace

StabilizerResult::StabilizerResult(int vertex_count, std::vector<std::uint16_t> flat,
                                   std::vector<int> refinement)
    : vertex_count_(vertex_count), flat_(std::move(flat)), refinement_(std::move(refinement)) {}

VertexMap StabilizerResult::element(std::size_t i) const {
    const std::size_t v = static_cast<std::size_t>(vertex_count_);
    std::vector<std::uint16_t> images(flat_.begin() + static_cast<std::ptrdiff_t>(i * v),
                                      flat_.begin() + static_cast<std::ptrdiff_t>((i + 1) * v));
    return VertexMap::from_images(std::move(images));
}

bool StabilizerResult::contains(const VertexMap& m) const {
    if (m.vertex_count() != vertex_count_) return false;
    const std::size_t v = static_cast<std::size_t>(vertex_count_);
    const auto& target = m.images();
    std::size_t lo = 0, hi = order();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const std::uint16_t* row = flat_.data() + mid * v;
        if (std::equal(row, row + v, target.begin())) return true;
        if (std::lexicographical_compare(row, row + v, target.begin(), target.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return false;
}

bool StabilizerResult::closed_under_group_ops(std::size_t pair_limit) const {
    const std::uint64_t n_elems = order();
    if (n_elems == 0) return false;
    if (!contains(VertexMap(vertex_count_))) return false;
    for (std::size_t i = 0; i < n_elems; ++i) {
        if (!contains(element(i).inverse())) return false;
    }
    std::size_t stride = 1;
    if (n_elems * n_elems > pair_limit) {
        stride = static_cast<std::size_t>((n_elems * n_elems + pair_limit - 1) / pair_limit);
    }
    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < n_elems; ++i) {
        const VertexMap a = element(i);
        for (std::size_t j = 0; j < n_elems; ++j, ++pair_index) {
            if (pair_index % stride != 0) continue;
            if (!contains(a.after(element(j)))) return false;
        }
    }
    return true;
}

StabilizerResult stabilizer_of_empty(const HGraph& g, const SearchOptions& opts) {
    if (static_cast<std::size_t>(g.vertex_count()) > opts.max_vertices) {
        throw SearchLimitError("graph has " + std::to_string(g.vertex_count()) +
                               " vertices, above the search cap of " +
                               std::to_string(opts.max_vertices));
    }
    Searcher s(g, opts);
    s.search(0);

    // Canonical order: sorting the rows makes the result independent of the
    // branching direction.
    const std::size_t v = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::size_t> idx(s.found_count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const std::uint16_t* ra = s.found.data() + a * v;
        const std::uint16_t* rb = s.found.data() + b * v;
        return std::lexicographical_compare(ra, ra + v, rb, rb + v);
    });
    std::vector<std::uint16_t> sorted;
    sorted.reserve(s.found.size());
    for (std::size_t i : idx) {
        sorted.insert(sorted.end(), s.found.begin() + static_cast<std::ptrdiff_t>(i * v),
                      s.found.begin() + static_cast<std::ptrdiff_t>((i + 1) * v));
    }
    StabilizerResult result(g.vertex_count(), std::move(sorted), base_refinement_colors(g));

    if (opts.verify_each) {
        for (std::size_t i = 0; i < result.order(); ++i) {
            const VerifyResult check = verify_automorphism(result.element(i), g);
            if (!check.ok) {
                throw std::logic_error("search produced a non-automorphism: " + check.failure);
            }
        }
    }
    return result;
}

void verify_translation_orbit(const HGraph& g) {
    const std::uint32_t base_mask = g.vertex_mask(g.base_vertex());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t shift = g.vertex_mask(v) ^ base_mask;
        std::vector<std::uint16_t> images(static_cast<std::size_t>(g.vertex_count()));
        for (int a = 0; a < g.vertex_count(); ++a) {
            const int idx = g.index_of_mask(g.vertex_mask(a) ^ shift);
            if (idx < 0) {
                throw std::logic_error("translation left the vertex set; parity bookkeeping is wrong");
            }
            images[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(idx);
        }
        const VertexMap translation = VertexMap::from_images(std::move(images));
        if (translation.apply(g.base_vertex()) != v) {
            throw std::logic_error("translation does not move the base vertex as expected");
        }
        const VerifyResult check = verify_automorphism(translation, g);
        if (!check.ok) {
            throw std::logic_error("translation failed the automorphism check: " + check.failure);
        }
    }
}

AutOrderResult aut_order_detail(const HGraph& g, const SearchOptions& opts) {
    verify_translation_orbit(g);
    const StabilizerResult stab = stabilizer_of_empty(g, opts);
    AutOrderResult out;
    out.orbit_size = static_cast<std::uint64_t>(g.vertex_count());
    out.stabilizer_order = stab.order();
    out.order = out.orbit_size * out.stabilizer_order;
    return out;
}

std::uint64_t aut_order(const HGraph& g, const SearchOptions& opts) {
    return aut_order_detail(g, opts).order;
}

namespace {

bool element_matches_map(const SymmetryElement& e, const HGraph& g, const VertexMap& m) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (e.apply_bits(g.vertex_mask(v)) != g.vertex_mask(m.apply(v))) return false;
    }
    return true;
}

std::optional<SymmetryElement> try_candidate(Subset translation, std::vector<int> images,
                                             Family family, const HGraph& g, const VertexMap& m) {
    try {
        SymmetryElement cand(std::move(translation), Permutation::from_images(std::move(images)),
                             family);
        if (element_matches_map(cand, g, m)) return cand;
    } catch (const std::invalid_argument&) {
        // not a bijection; fall through
    }
    return std::nullopt;
}

// Recovery from singleton images; the graph carries every subset, so the
// patterns of the three families are read off directly:
//   plain       every singleton image is a singleton
//   extended-A  one singleton maps to the full set, the rest to singletons
//   extended-B  one singleton maps to a singleton, the rest to (n-2)-sets
std::optional<SymmetryElement> decompose_whole(const VertexMap& m, const HGraph& g) {
    const int n = g.n();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const std::uint32_t x = g.vertex_mask(m.apply(g.index_of_mask(0)));
    const Subset translation(n, x);
    const auto resid = [&](std::uint32_t mask) {
        return x ^ g.vertex_mask(m.apply(g.index_of_mask(mask)));
    };

    std::vector<std::uint32_t> sing(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) sing[static_cast<std::size_t>(i)] = resid(std::uint32_t{1} << (i - 1));

    // plain
    {
        std::vector<int> images(static_cast<std::size_t>(n));
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            const std::uint32_t img = sing[static_cast<std::size_t>(i)];
            if (std::popcount(img) != 1) {
                ok = false;
            } else {
                images[static_cast<std::size_t>(i - 1)] = std::countr_zero(img) + 1;
            }
        }
        if (ok) {
            if (auto e = try_candidate(translation, std::move(images), Family::plain, g, m)) return e;
        }
    }
    // extended-A
    {
        int t = 0;
        bool ok = true;
        std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 1; i <= n && ok; ++i) {
            const std::uint32_t img = sing[static_cast<std::size_t>(i)];
            if (img == full && n > 1) {
                if (t != 0) ok = false;
                t = i;
            } else if (std::popcount(img) == 1) {
                images[static_cast<std::size_t>(i - 1)] = std::countr_zero(img) + 1;
            } else {
                ok = false;
            }
        }
        if (ok && t != 0) {
            images[static_cast<std::size_t>(t - 1)] = n + 1;
            std::vector<bool> taken(static_cast<std::size_t>(n) + 2, false);
            bool valid = true;
            for (int i = 1; i <= n; ++i) {
                const int v = images[static_cast<std::size_t>(i - 1)];
                if (v < 1 || v > n + 1 || taken[static_cast<std::size_t>(v)]) {
                    valid = false;
                    break;
                }
                taken[static_cast<std::size_t>(v)] = true;
            }
            if (valid) {
                for (int v = 1; v <= n + 1; ++v) {
                    if (!taken[static_cast<std::size_t>(v)]) {
                        images[static_cast<std::size_t>(n)] = v;
                        break;
                    }
                }
                if (auto e = try_candidate(translation, std::move(images), Family::extended_a, g, m))
                    return e;
            }
        }
    }
    // extended-B
    {
        int t = 0;
        bool ok = n >= 4;  // below n = 4 the pattern is indistinguishable from plain
        for (int i = 1; i <= n && ok; ++i) {
            const int w = std::popcount(sing[static_cast<std::size_t>(i)]);
            if (w == 1) {
                if (t != 0) ok = false;
                t = i;
            } else if (w != n - 2) {
                ok = false;
            }
        }
        if (ok && t != 0) {
            const int tprime = std::countr_zero(sing[static_cast<std::size_t>(t)]) + 1;
            std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
            images[static_cast<std::size_t>(t - 1)] = n + 1;
            images[static_cast<std::size_t>(n)] = tprime;
            bool valid = true;
            for (int i = 1; i <= n && valid; ++i) {
                if (i == t) continue;
                // image of {i} misses exactly {sigma(i), t'}
                std::uint32_t missing = full & ~sing[static_cast<std::size_t>(i)];
                missing &= ~(std::uint32_t{1} << (tprime - 1));
                if (std::popcount(missing) != 1) {
                    valid = false;
                    break;
                }
                images[static_cast<std::size_t>(i - 1)] = std::countr_zero(missing) + 1;
            }
            if (valid) {
                if (auto e = try_candidate(translation, std::move(images), Family::extended_b, g, m))
                    return e;
            }
        }
    }
    return std::nullopt;
}

// Recovery on a parity component, which has no singleton vertices: read the
// permutation off the images of the 2-element sets instead. Odd-side maps
// are conjugated into even masks by the translation {1} first.
std::optional<SymmetryElement> decompose_component(const VertexMap& original_map,
                                                   const HGraph& original,
                                                   std::uint32_t conjugator) {
    const int n = original.n();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // residual over even masks, conjugated back into this component
    const auto mapped = [&](std::uint32_t even_mask) {
        const int idx = original.index_of_mask(even_mask ^ conjugator);
        return conjugator ^ original.vertex_mask(original_map.apply(idx));
    };
    const std::uint32_t x = mapped(0);
    const auto resid = [&](std::uint32_t mask) { return x ^ mapped(mask); };

    if (n < 3) {
        // Too few probe sets; try every plain permutation directly, solving
        // the translation from the base vertex.
        const std::uint32_t base = original.vertex_mask(0);
        const std::uint32_t base_img = original.vertex_mask(original_map.apply(0));
        for (const Permutation& sigma : all_permutations(n)) {
            const Subset translation(n, base_img ^ sigma.apply_bits(base));
            SymmetryElement cand(translation, sigma, Family::plain);
            if (element_matches_map(cand, original, original_map)) return cand;
        }
        return std::nullopt;
    }

    std::vector<std::vector<std::uint32_t>> pair_img(static_cast<std::size_t>(n) + 1,
                                                     std::vector<std::uint32_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::uint32_t mask = (std::uint32_t{1} << (i - 1)) | (std::uint32_t{1} << (j - 1));
            pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = resid(mask);
            pair_img[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = resid(mask);
        }
    }

    const auto finish = [&](std::vector<int> images, Family family) -> std::optional<SymmetryElement> {
        // Reconstruct the translation over the original component: for the
        // conjugated residual f we have  m(Y) = X xor f(Y)  with
        // X = conjugator xor x xor f(conjugator).
        try {
            Permutation sigma = Permutation::from_images(std::move(images));
            SymmetryElement unshifted(Subset::empty(n), sigma, family);
            const std::uint32_t f_conj = unshifted.apply_bits(conjugator);
            const Subset translation(n, conjugator ^ x ^ f_conj);
            SymmetryElement cand(translation, sigma, family);
            if (element_matches_map(cand, original, original_map)) return cand;
        } catch (const std::invalid_argument&) {
        }
        return std::nullopt;
    };

    // plain: every pair image is a pair
    {
        bool all_pairs = true;
        for (int i = 1; i <= n && all_pairs; ++i) {
            for (int j = i + 1; j <= n && all_pairs; ++j) {
                if (std::popcount(pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 2)
                    all_pairs = false;
            }
        }
        if (all_pairs) {
            std::vector<int> images(static_cast<std::size_t>(n), 0);
            bool valid = true;
            for (int i = 1; i <= n && valid; ++i) {
                const int j1 = (i == 1) ? 2 : 1;
                const int j2 = (i <= 2) ? 3 : 2;
                const std::uint32_t common =
                    pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j1)] &
                    pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)];
                if (std::popcount(common) != 1) {
                    valid = false;
                } else {
                    images[static_cast<std::size_t>(i - 1)] = std::countr_zero(common) + 1;
                }
            }
            if (valid) {
                if (auto e = finish(std::move(images), Family::plain)) return e;
            }
        }
    }
    // extended-A restricted to a component: pairs containing the special
    // point map to (n-1)-sets, the others to pairs.
    {
        std::uint32_t big_common = full;
        bool any_big = false;
        bool shape_ok = true;
        for (int i = 1; i <= n && shape_ok; ++i) {
            for (int j = i + 1; j <= n && shape_ok; ++j) {
                const int w =
                    std::popcount(pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                if (w == n - 1) {
                    any_big = true;
                    big_common &= (std::uint32_t{1} << (i - 1)) | (std::uint32_t{1} << (j - 1));
                } else if (w != 2) {
                    shape_ok = false;
                }
            }
        }
        if (shape_ok && any_big && std::popcount(big_common) == 1) {
            const int t = std::countr_zero(big_common) + 1;
            std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
            images[static_cast<std::size_t>(t - 1)] = n + 1;
            bool valid = true;
            std::uint32_t seen = 0;
            for (int i = 1; i <= n && valid; ++i) {
                if (i == t) continue;
                // image of {i,t} is the complement of {sigma(i)}
                const std::uint32_t missing =
                    full & ~pair_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (std::popcount(missing) != 1 || (seen & missing)) {
                    valid = false;
                } else {
                    seen |= missing;
                    images[static_cast<std::size_t>(i - 1)] = std::countr_zero(missing) + 1;
                }
            }
            if (valid) {
                for (int v = 1; v <= n + 1; ++v) {
                    bool taken = false;
                    for (int i = 1; i <= n; ++i) {
                        if (images[static_cast<std::size_t>(i - 1)] == v) taken = true;
                    }
                    if (!taken) {
                        images[static_cast<std::size_t>(n)] = v;
                        break;
                    }
                }
                if (auto e = finish(std::move(images), Family::extended_a)) return e;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SymmetryElement> decompose_known(const VertexMap& m, const HGraph& g) {
    if (m.vertex_count() != g.vertex_count()) {
        throw std::invalid_argument("map size does not match the graph's vertex set");
    }
    if (g.component() == Component::whole) {
        return decompose_whole(m, g);
    }
    const std::uint32_t conjugator = (g.component() == Component::odd) ? 1u : 0u;
    return decompose_component(m, g, conjugator);
}

}  // namespace hnk
