#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnk/hgraph.hpp"
#include "hnk/permutation.hpp"
#include "hnk/subset.hpp"
#include "hnk/vertex_map.hpp"

namespace hnk {

using BigInt = boost::multiprecision::cpp_int;

/// X xor Y: the translation by X applied to Y. Translations are
/// automorphisms of every graph in the family because XOR distances are
/// translation-invariant.
Subset apply_translation(const Subset& x, const Subset& y);

/// Element-wise action of sigma in S_n on a subset of [n].
Subset apply_permutation(const Permutation& sigma, const Subset& x);

/// The GF(2)-linear transform on characteristic vectors induced by a
/// permutation of {1,...,n+1}: coordinate i of the output reads coordinate
/// sigma^-1(i) of the input, XOR-ed with the coordinate that sigma sends to
/// the virtual point n+1 (coordinate n+1 itself reads as 0).
Subset apply_extended_linear(const Permutation& sigma, const Subset& v);

/// Set form of the same transform: permute the set, complementing in [n]
/// whenever the preimage of the virtual point lies inside the set. Weight-k
/// preserving exactly when n = 2k-1, where it is an automorphism.
Subset apply_extended_a(const Permutation& sigma, const Subset& x);

/// The parity-aware variant used at n = 2k+1 (k odd): four cases by
/// |X| parity and membership of the virtual point's preimage. Complements
/// are always taken in [n]. Total on all subsets for any n.
Subset apply_extended_b(const Permutation& sigma, const Subset& x);

enum class Family { plain, extended_a, extended_b };

std::string to_string(Family f);  // "plain" | "extA" | "extB"

/// A structured automorphism in translation-first normal form: the action
/// is Y -> translation xor f(Y), where f is the permutation action of the
/// element's family. All three family actions are GF(2)-linear on
/// characteristic vectors, which is what makes composition structured.
class SymmetryElement {
public:
    SymmetryElement(Subset translation, Permutation perm, Family family);

    static SymmetryElement identity(int ground_size);
    static SymmetryElement translation_only(Subset x);
    static SymmetryElement plain(Subset translation, Permutation sigma_n);
    static SymmetryElement extended_a(Subset translation, Permutation sigma_n_plus_1);
    static SymmetryElement extended_b(Subset translation, Permutation sigma_n_plus_1);

    int ground_size() const noexcept { return translation_.ground_size(); }
    const Subset& translation_part() const noexcept { return translation_; }
    const Permutation& perm() const noexcept { return perm_; }
    Family family() const noexcept { return family_; }

    /// Permutation action alone (no translation).
    Subset apply_perm_part(const Subset& y) const;

    Subset apply(const Subset& y) const;
    std::uint32_t apply_bits(std::uint32_t mask) const;

    SymmetryElement inverse() const;

    bool operator==(const SymmetryElement& other) const = default;

private:
    Subset translation_;
    Permutation perm_;
    Family family_;
};

/// Result of composing two structured elements. Compatible families (equal,
/// or one side plain) stay structured; mixing the two extended families
/// falls back to the raw vertex map over the full 2^n vertex set, flagged
/// as destructured.
struct Composition {
    bool destructured = false;
    std::optional<SymmetryElement> element;
    std::optional<VertexMap> map;  ///< over all 2^n masks (index == mask), when destructured
};

/// a after b: the composed action applies b first. The structured
/// translation part is translation(a) xor f_a(translation(b)).
Composition compose(const SymmetryElement& a, const SymmetryElement& b);

/// Flatten an element to an image table over a graph's vertex indexing.
/// Throws if the action does not stabilize the graph's vertex set.
VertexMap to_vertex_map(const SymmetryElement& e, const HGraph& g);

struct VerifyResult {
    bool ok = false;
    std::string failure;
    std::optional<std::pair<int, int>> witness;  ///< offending vertex pair (indices)
    explicit operator bool() const noexcept { return ok; }
};

/// Exhaustive adjacency-and-non-adjacency check over all vertex pairs.
/// A non-bijective table is reported as a failure with a collision witness.
VerifyResult verify_automorphism(const VertexMap& m, const HGraph& g);
VerifyResult verify_automorphism(const SymmetryElement& e, const HGraph& g);

struct PredictedOrder {
    std::optional<BigInt> value;   ///< empty = no prediction (open or degenerate case)
    std::string case_tag;          ///< which regime the prediction comes from
    std::vector<std::string> caveats;
    std::optional<BigInt> component_value;  ///< per-component prediction for even k
};

/// Case dispatch of the known automorphism-group orders by regime:
/// k = 1 -> 2^n n!; n = 2k -> open; n = 2k-1 (k >= 2) -> 2^n (n+1)!;
/// n = 2k+1 -> 2^n (n+1)! for odd k >= 3 and 2^n n! for even k;
/// everything else -> 2^n n!. For even k the graph is disconnected, so the
/// whole-graph value carries a caveat and the per-component value
/// 2^(n-1) n! is reported alongside.
PredictedOrder predicted_aut_order(int n, int k);

BigInt factorial_big(int m);
BigInt pow2_big(int e);

}  // namespace hnk
