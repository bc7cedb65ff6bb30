#include "hnk/symmetry.hpp"

#include <bit>
#include <stdexcept>

namespace hnk {

namespace {

void require_extended_domain(const Permutation& sigma, const Subset& x) {
    if (sigma.domain_size() != x.ground_size() + 1) {
        throw std::invalid_argument("permutation must act on {1,...,n+1} for a subset of [n]");
    }
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

}  // namespace

Subset apply_translation(const Subset& x, const Subset& y) {
    return symmetric_difference(x, y);
}

Subset apply_permutation(const Permutation& sigma, const Subset& x) {
    if (sigma.domain_size() != x.ground_size()) {
        throw std::invalid_argument("permutation domain does not match the subset's ground set");
    }
    return Subset(x.ground_size(), sigma.apply_bits(x.bits()));
}

Subset apply_extended_linear(const Permutation& sigma, const Subset& v) {
    require_extended_domain(sigma, v);
    const int n = v.ground_size();
    const Permutation inv = sigma.inverse();
    const int t = inv.apply(n + 1);
    const std::uint32_t in = v.bits();
    // Coordinate t of the input, with the virtual coordinate n+1 fixed at 0.
    const std::uint32_t vt = (t == n + 1) ? 0u : ((in >> (t - 1)) & 1u);
    std::uint32_t out = 0;
    for (int i = 1; i <= n; ++i) {
        const int src = inv.apply(i);
        const std::uint32_t bit = (src == n + 1) ? 0u : ((in >> (src - 1)) & 1u);
        out |= (bit ^ vt) << (i - 1);
    }
    return Subset(n, out);
}

Subset apply_extended_a(const Permutation& sigma, const Subset& x) {
    require_extended_domain(sigma, x);
    const int n = x.ground_size();
    const int t = sigma.preimage(n + 1);
    const std::uint32_t tbit =
        (t == n + 1) ? 0u : (std::uint32_t{1} << (t - 1));
    if (t == n + 1 || (x.bits() & tbit) == 0) {
        // sigma never hits the virtual point here, so the image stays in [n].
        return Subset(n, sigma.apply_bits(x.bits()) & full_mask(n));
    }
    const std::uint32_t img = sigma.apply_bits(x.bits() & ~tbit);
    return Subset(n, (~img) & full_mask(n));
}

Subset apply_extended_b(const Permutation& sigma, const Subset& x) {
    require_extended_domain(sigma, x);
    const int n = x.ground_size();
    const int t = sigma.preimage(n + 1);
    if (t == n + 1) {
        return Subset(n, sigma.apply_bits(x.bits()) & full_mask(n));
    }
    const std::uint32_t tbit = std::uint32_t{1} << (t - 1);
    const std::uint32_t vbit = std::uint32_t{1} << n;  // the virtual point n+1
    const bool even = x.weight() % 2 == 0;
    const bool has_t = (x.bits() & tbit) != 0;
    std::uint32_t img;
    if (even && !has_t) {
        img = sigma.apply_bits(x.bits());
    } else if (even && has_t) {
        img = ~sigma.apply_bits(x.bits() & ~tbit);
    } else if (!even && !has_t) {
        img = ~sigma.apply_bits(x.bits() | vbit);
    } else {
        img = sigma.apply_bits((x.bits() | vbit) & ~tbit);
    }
    return Subset(n, img & full_mask(n));
}

std::string to_string(Family f) {
    switch (f) {
        case Family::plain: return "plain";
        case Family::extended_a: return "extA";
        case Family::extended_b: return "extB";
    }
    return "?";
}

SymmetryElement::SymmetryElement(Subset translation, Permutation perm, Family family)
    : translation_(std::move(translation)), perm_(std::move(perm)), family_(family) {
    const int n = translation_.ground_size();
    const int expected = (family == Family::plain) ? n : n + 1;
    if (perm_.domain_size() != expected) {
        throw std::invalid_argument("permutation domain must be " + std::to_string(expected) +
                                    " for family " + to_string(family));
    }
}

SymmetryElement SymmetryElement::identity(int ground_size) {
    return SymmetryElement(Subset::empty(ground_size), Permutation::identity(ground_size),
                           Family::plain);
}

SymmetryElement SymmetryElement::translation_only(Subset x) {
    const int n = x.ground_size();
    return SymmetryElement(std::move(x), Permutation::identity(n), Family::plain);
}

SymmetryElement SymmetryElement::plain(Subset translation, Permutation sigma_n) {
    return SymmetryElement(std::move(translation), std::move(sigma_n), Family::plain);
}

SymmetryElement SymmetryElement::extended_a(Subset translation, Permutation sigma) {
    return SymmetryElement(std::move(translation), std::move(sigma), Family::extended_a);
}

SymmetryElement SymmetryElement::extended_b(Subset translation, Permutation sigma) {
    return SymmetryElement(std::move(translation), std::move(sigma), Family::extended_b);
}

Subset SymmetryElement::apply_perm_part(const Subset& y) const {
    switch (family_) {
        case Family::plain: return apply_permutation(perm_, y);
        case Family::extended_a: return apply_extended_a(perm_, y);
        case Family::extended_b: return apply_extended_b(perm_, y);
    }
    throw std::logic_error("unreachable family");
}

Subset SymmetryElement::apply(const Subset& y) const {
    return symmetric_difference(translation_, apply_perm_part(y));
}

std::uint32_t SymmetryElement::apply_bits(std::uint32_t mask) const {
    return apply(Subset(ground_size(), mask)).bits();
}

SymmetryElement SymmetryElement::inverse() const {
    // The permutation actions are GF(2)-linear, so the inverse element is
    // (f^-1(X), sigma^-1) in the same family.
    const Permutation inv = perm_.inverse();
    SymmetryElement unshifted(Subset::empty(ground_size()), inv, family_);
    Subset back = unshifted.apply_perm_part(translation_);
    return SymmetryElement(back, inv, family_);
}

namespace {

Permutation promote_to_extended(const Permutation& sigma_n) {
    std::vector<int> images = sigma_n.images();
    images.push_back(sigma_n.domain_size() + 1);
    return Permutation::from_images(std::move(images));
}

}  // namespace

Composition compose(const SymmetryElement& a, const SymmetryElement& b) {
    if (a.ground_size() != b.ground_size()) {
        throw std::invalid_argument("composing elements over different ground sets");
    }
    const int n = a.ground_size();

    const bool mixable =
        a.family() == b.family() || a.family() == Family::plain || b.family() == Family::plain;
    if (!mixable) {
        // Mixing the two extended families: no shared structured form, fall
        // back to the raw pointwise composition over all 2^n masks.
        Composition out;
        out.destructured = true;
        std::vector<std::uint16_t> images(std::size_t{1} << n);
        for (std::uint32_t mask = 0; mask < images.size(); ++mask) {
            images[mask] = static_cast<std::uint16_t>(a.apply_bits(b.apply_bits(mask)));
        }
        out.map = VertexMap::from_images(std::move(images));
        return out;
    }

    Family family = (a.family() == Family::plain) ? b.family() : a.family();
    Permutation pa = a.perm();
    Permutation pb = b.perm();
    if (family != Family::plain) {
        if (a.family() == Family::plain) pa = promote_to_extended(pa);
        if (b.family() == Family::plain) pb = promote_to_extended(pb);
    }
    const Permutation product = pa.after(pb);
    // Linearity of the permutation action turns X_a xor f_a(X_b xor f_b(Y))
    // into (X_a xor f_a(X_b)) xor (f_a f_b)(Y).
    SymmetryElement a_normalized(Subset::empty(n), pa, family);
    const Subset translation =
        symmetric_difference(a.translation_part(), a_normalized.apply_perm_part(b.translation_part()));
    Composition out;
    out.element = SymmetryElement(translation, product, family);
    return out;
}

VertexMap to_vertex_map(const SymmetryElement& e, const HGraph& g) {
    if (e.ground_size() != g.n()) {
        throw std::invalid_argument("element ground size does not match the graph");
    }
    std::vector<std::uint16_t> images(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t img = e.apply_bits(g.vertex_mask(v));
        const int idx = g.index_of_mask(img);
        if (idx < 0) {
            throw std::invalid_argument("element does not stabilize the graph's vertex set (image " +
                                        subset_text(img) + " is filtered out)");
        }
        images[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(idx);
    }
    return VertexMap::from_images(std::move(images));
}

VerifyResult verify_automorphism(const VertexMap& m, const HGraph& g) {
    VerifyResult out;
    if (m.vertex_count() != g.vertex_count()) {
        out.failure = "map size does not match the vertex set";
        return out;
    }
    int ca = -1, cb = -1;
    if (!is_bijection(m.images(), &ca, &cb)) {
        out.failure = "not a bijection";
        out.witness = std::make_pair(ca, cb);
        return out;
    }
    const int v_count = g.vertex_count();
    for (int a = 0; a < v_count; ++a) {
        const std::uint32_t ma = g.vertex_mask(a);
        const std::uint32_t fa = g.vertex_mask(m.apply(a));
        for (int b = a + 1; b < v_count; ++b) {
            const bool before = g.adjacent_masks(ma, g.vertex_mask(b));
            const bool after = g.adjacent_masks(fa, g.vertex_mask(m.apply(b)));
            if (before != after) {
                out.failure = before ? "edge not preserved" : "non-edge mapped onto an edge";
                out.witness = std::make_pair(a, b);
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

VerifyResult verify_automorphism(const SymmetryElement& e, const HGraph& g) {
    try {
        return verify_automorphism(to_vertex_map(e, g), g);
    } catch (const std::invalid_argument& err) {
        VerifyResult out;
        out.failure = err.what();
        return out;
    }
}

BigInt factorial_big(int m) {
    BigInt out = 1;
    for (int i = 2; i <= m; ++i) out *= i;
    return out;
}

BigInt pow2_big(int e) {
    BigInt out = 1;
    out <<= e;
    return out;
}

PredictedOrder predicted_aut_order(int n, int k) {
    PredictedOrder out;
    if (n < 1 || k < 0 || k > n) {
        out.case_tag = "out-of-range";
        return out;
    }
    if (k == 0 || k == n) {
        out.case_tag = "degenerate";
        out.caveats.push_back("edge-degenerate graph; no order claim");
        return out;
    }
    const auto even_k_caveats = [&] {
        if (k % 2 == 0) {
            out.caveats.push_back("disconnected");
            out.caveats.push_back("whole-graph value unresolved; see component_value");
            out.component_value = pow2_big(n - 1) * factorial_big(n);
        }
    };
    if (k == 1) {
        out.value = pow2_big(n) * factorial_big(n);
        out.case_tag = "hypercube";
        return out;
    }
    if (n == 2 * k) {
        out.case_tag = "open-n-2k";
        even_k_caveats();
        return out;
    }
    if (n == 2 * k - 1) {
        out.value = pow2_big(n) * factorial_big(n + 1);
        out.case_tag = "boundary-below";
        even_k_caveats();
        return out;
    }
    if (n == 2 * k + 1) {
        if (k % 2 == 1) {
            out.value = pow2_big(n) * factorial_big(n + 1);
            out.case_tag = "boundary-above-odd-k";
        } else {
            out.value = pow2_big(n) * factorial_big(n);
            out.case_tag = "boundary-above-even-k";
            even_k_caveats();
        }
        return out;
    }
    out.value = pow2_big(n) * factorial_big(n);
    out.case_tag = "generic";
    even_k_caveats();
    return out;
}

}  // namespace hnk
