#pragma once

#include <cstdint>
#include <string>

#include "hnk/autsearch.hpp"
#include "hnk/hgraph.hpp"
#include "hnk/symmetry.hpp"

namespace hnk {

/// DOT form: vertex labels are the subset text forms; undirected edges,
/// each listed once with the smaller encoding first.
std::string to_dot(const HGraph& g);

/// JSON form: {"n":..., "k":..., "component":..., "vertices":[...],
/// "edges":[[a,b],...]} with vertices as encoded integers ascending and
/// a < b in every edge.
std::string to_json(const HGraph& g);

/// {"translation": int, "perm": [images], "family": "plain"|"extA"|"extB"}.
std::string to_json(const SymmetryElement& e);

/// One order-verification record:
/// {"n","k","component","oracle_order","predicted_order"|null,
///  "agrees":bool|null,"stabilizer_order","elements_outside_known_group"}.
std::string aut_report_entry_json(const HGraph& g, const AutOrderResult& oracle,
                                  const PredictedOrder& predicted,
                                  std::uint64_t elements_outside_known_group);

}  // namespace hnk
