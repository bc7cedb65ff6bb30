#include "hnk/hgraph.hpp"

#include <bit>
#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hnk {

std::string to_string(Component c) {
    switch (c) {
        case Component::whole: return "whole";
        case Component::odd: return "odd";
        case Component::even: return "even";
    }
    return "?";
}

Component component_from_string(const std::string& s) {
    if (s == "whole") return Component::whole;
    if (s == "odd") return Component::odd;
    if (s == "even") return Component::even;
    throw std::invalid_argument("unknown component '" + s + "' (expected whole|odd|even)");
}

HGraph::HGraph(GraphParams params) : params_(params) {
    const int n = params.n;
    const int k = params.k;
    if (n < 1 || n > kMaxGroundSize) {
        throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxGroundSize) + "]");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("k must be in [0, n]");
    }
    if (params.component != Component::whole && k % 2 != 0) {
        throw std::invalid_argument(
            "parity components are only meaningful for even k; the odd-k graph is connected");
    }

    const std::uint32_t total = std::uint32_t{1} << n;
    index_of_.assign(total, -1);
    vertices_.reserve(params.component == Component::whole ? total : total / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const int parity = std::popcount(mask) % 2;
        if (params.component == Component::odd && parity == 0) continue;
        if (params.component == Component::even && parity == 1) continue;
        index_of_[mask] = static_cast<std::int32_t>(vertices_.size());
        vertices_.push_back(mask);
    }

    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) == k) deltas_.push_back(mask);
    }
}

int HGraph::index_of_mask(std::uint32_t mask) const {
    if (mask >= index_of_.size()) return -1;
    return index_of_[mask];
}

int HGraph::index_of(const Subset& x) const {
    if (x.ground_size() != params_.n) {
        throw std::invalid_argument("subset ground size does not match the graph");
    }
    return index_of_mask(x.bits());
}

bool HGraph::adjacent_masks(std::uint32_t x, std::uint32_t y) const noexcept {
    return params_.k >= 1 && std::popcount(x ^ y) == params_.k;
}

bool HGraph::adjacent(int a, int b) const {
    return adjacent_masks(vertex_mask(a), vertex_mask(b));
}

std::vector<int> HGraph::neighbors(int index) const {
    const std::uint32_t v = vertex_mask(index);
    std::vector<int> out;
    if (params_.k == 0) return out;
    out.reserve(deltas_.size());
    for (std::uint32_t d : deltas_) {
        const int idx = index_of_mask(v ^ d);
        if (idx >= 0) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int HGraph::degree(int index) const { return static_cast<int>(neighbors(index).size()); }

std::size_t HGraph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        twice += static_cast<std::size_t>(degree(v));
    }
    return twice / 2;
}

const std::vector<std::vector<int>>& HGraph::adjacency_lists() const {
    if (adjacency_cache_.empty() && vertex_count() > 0) {
        adjacency_cache_.resize(static_cast<std::size_t>(vertex_count()));
        for (int v = 0; v < vertex_count(); ++v) {
            adjacency_cache_[static_cast<std::size_t>(v)] = neighbors(v);
        }
    }
    return adjacency_cache_;
}

void HGraph::validate_adjacency_representations() const {
    if (params_.n > 12) {
        throw std::invalid_argument("adjacency lists are only materialized for n <= 12");
    }
    const auto& lists = adjacency_lists();
    for (int a = 0; a < vertex_count(); ++a) {
        std::size_t hits = 0;
        for (int b = 0; b < vertex_count(); ++b) {
            const bool oracle = adjacent(a, b);
            const bool listed = std::binary_search(lists[static_cast<std::size_t>(a)].begin(),
                                                   lists[static_cast<std::size_t>(a)].end(), b);
            if (oracle != listed) {
                throw std::logic_error("adjacency representations disagree at pair (" +
                                       std::to_string(a) + ", " + std::to_string(b) + ")");
            }
            if (oracle) ++hits;
        }
        if (hits != lists[static_cast<std::size_t>(a)].size()) {
            throw std::logic_error("adjacency list length mismatch at vertex " + std::to_string(a));
        }
    }
}

HGraph build_graph(GraphParams params) { return HGraph(params); }

std::vector<std::vector<int>> connected_components(const HGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> bfs_distances(const HGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) {
        throw std::invalid_argument("source index outside the vertex set");
    }
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const std::uint32_t mask = g.vertex_mask(v);
        for (std::uint32_t d : g.weight_k_deltas()) {
            const int u = g.index_of_mask(mask ^ d);
            if (u >= 0 && dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

DistanceClasses distance_classes(const HGraph& g, const Subset& source) {
    const int src = g.index_of(source);
    if (src < 0) {
        throw std::invalid_argument("source " + to_string(source) +
                                    " violates the graph's parity filter");
    }
    const std::vector<int> dist = bfs_distances(g, src);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    DistanceClasses out{source, {}, ecc};
    out.classes.assign(static_cast<std::size_t>(ecc) + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d >= 0) out.classes[static_cast<std::size_t>(d)].push_back(g.vertex(v));
    }
    return out;
}

int diameter(const HGraph& g) {
    const std::vector<int> dist = bfs_distances(g, g.base_vertex());
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) {
            throw std::invalid_argument(
                "graph is disconnected; take a parity component (component=odd|even) instead");
        }
        ecc = std::max(ecc, d);
    }
    return ecc;
}

PredictedDiameter predicted_diameter(int n, int k, Component component) {
    PredictedDiameter out;
    if (n < 1 || k < 0 || k > n) {
        out.case_tag = "out-of-range";
        return out;
    }
    if (k == 0 || k == n) {
        out.case_tag = "degenerate";
        return out;
    }
    const auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    if (component == Component::whole) {
        if (k % 2 == 1) {
            out.covered = true;
            if (n >= 2 * k - 1) {
                out.value = ceil_div(n - 1, k) + 1;
                out.case_tag = "odd-k-wide";
            } else {
                out.value = ceil_div(n - 1, n - k) + 1;
                out.case_tag = "odd-k-narrow";
            }
            return out;
        }
        out.case_tag = "disconnected";
        return out;
    }
    // parity component; only even k reaches here meaningfully
    if (k % 2 != 0) {
        out.case_tag = "component-of-connected-graph";
        return out;
    }
    if (k == 2) {
        out.covered = true;
        out.value = n / 2;
        out.case_tag = "component-k2";
        return out;
    }
    if (k == n - 1 && n % 2 == 1) {
        out.covered = true;
        out.value = (n - 1) / 2;
        out.case_tag = "component-k-n-1";
        return out;
    }
    out.case_tag = "not-covered";
    return out;
}

ParityIsomorphismWitness parity_isomorphism_check(int n, int k, std::optional<Subset> translator) {
    if (k % 2 != 0 || k < 0 || k > n) {
        throw std::invalid_argument("parity isomorphism check requires even k in [0, n]");
    }
    Subset t = translator.value_or(Subset::singleton(n, 1));
    if (t.ground_size() != n || t.weight() % 2 == 0) {
        throw std::invalid_argument("translator must be an odd-size subset of the same ground set");
    }
    const HGraph odd(GraphParams{n, k, Component::odd});
    const HGraph even(GraphParams{n, k, Component::even});

    ParityIsomorphismWitness out{t, 0, {}};
    out.image_of_mask.assign(std::size_t{1} << n, 0);
    const std::uint32_t tb = t.bits();

    std::vector<bool> hit(static_cast<std::size_t>(even.vertex_count()), false);
    for (int a = 0; a < odd.vertex_count(); ++a) {
        const std::uint32_t img = odd.vertex_mask(a) ^ tb;
        const int idx = even.index_of_mask(img);
        if (idx < 0 || hit[static_cast<std::size_t>(idx)]) {
            throw std::logic_error("translation by an odd set failed to biject the parity classes");
        }
        hit[static_cast<std::size_t>(idx)] = true;
        out.image_of_mask[odd.vertex_mask(a)] = img;
    }
    for (int a = 0; a < odd.vertex_count(); ++a) {
        for (int b = a + 1; b < odd.vertex_count(); ++b) {
            const bool e1 = odd.adjacent(a, b);
            const bool e2 = even.adjacent_masks(odd.vertex_mask(a) ^ tb, odd.vertex_mask(b) ^ tb);
            if (e1 != e2) {
                throw std::logic_error("translation witness does not preserve adjacency between " +
                                       to_string(odd.vertex(a)) + " and " + to_string(odd.vertex(b)));
            }
            if (e1) ++out.edges_checked;
        }
    }
    return out;
}

ComplementIsomorphismWitness complement_isomorphism_check(int n, int k) {
    if (n % 2 != 0 || k % 2 != 1 || k < 1 || k > n - 1) {
        throw std::invalid_argument("complement isomorphism check requires even n and odd k");
    }
    const HGraph from(GraphParams{n, k, Component::whole});
    const HGraph to(GraphParams{n, n - k, Component::whole});

    ComplementIsomorphismWitness out;
    const std::uint32_t total = std::uint32_t{1} << n;
    const std::uint32_t full = total - 1;
    out.image_of_mask.assign(total, 0);
    std::vector<bool> hit(total, false);
    for (std::uint32_t x = 0; x < total; ++x) {
        const std::uint32_t img = (std::popcount(x) % 2 == 0) ? x : (x ^ full);
        if (hit[img]) throw std::logic_error("complement witness is not a bijection");
        hit[img] = true;
        out.image_of_mask[x] = img;
    }
    for (std::uint32_t x = 0; x < total; ++x) {
        for (std::uint32_t y = x + 1; y < total; ++y) {
            const bool e1 = from.adjacent_masks(x, y);
            const bool e2 = to.adjacent_masks(out.image_of_mask[x], out.image_of_mask[y]);
            if (e1 != e2) {
                throw std::logic_error("complement witness does not preserve adjacency between " +
                                       subset_text(x) + " and " + subset_text(y));
            }
            if (e1) ++out.edges_checked;
        }
    }
    return out;
}

}  // namespace hnk
