#include "hnk/io.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace hnk {

using nlohmann::ordered_json;

std::string to_dot(const HGraph& g) {
    std::ostringstream os;
    os << "graph \"H(" << g.n() << "," << g.k() << ")";
    if (g.component() != Component::whole) os << " " << to_string(g.component());
    os << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << g.vertex_mask(v) << " [label=\"" << to_string(g.vertex(v)) << "\"];\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t mv = g.vertex_mask(v);
        for (int u : g.neighbors(v)) {
            const std::uint32_t mu = g.vertex_mask(u);
            if (mv < mu) os << "  v" << mv << " -- v" << mu << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_json(const HGraph& g) {
    ordered_json j;
    j["n"] = g.n();
    j["k"] = g.k();
    j["component"] = to_string(g.component());
    std::vector<std::uint32_t> vertices;
    vertices.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_mask(v));
    j["vertices"] = vertices;
    std::vector<std::array<std::uint32_t, 2>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t mv = g.vertex_mask(v);
        for (int u : g.neighbors(v)) {
            const std::uint32_t mu = g.vertex_mask(u);
            if (mv < mu) edges.push_back({mv, mu});
        }
    }
    j["edges"] = edges;
    return j.dump();
}

std::string to_json(const SymmetryElement& e) {
    ordered_json j;
    j["translation"] = e.translation_part().bits();
    j["perm"] = e.perm().images();
    j["family"] = to_string(e.family());
    return j.dump();
}

std::string aut_report_entry_json(const HGraph& g, const AutOrderResult& oracle,
                                  const PredictedOrder& predicted,
                                  std::uint64_t elements_outside_known_group) {
    ordered_json j;
    j["n"] = g.n();
    j["k"] = g.k();
    j["component"] = to_string(g.component());
    j["oracle_order"] = oracle.order;
    // Component graphs compare against the per-component prediction.
    std::optional<BigInt> expected =
        (g.component() == Component::whole) ? predicted.value : predicted.component_value;
    if (expected) {
        j["predicted_order"] = expected->str();
        j["agrees"] = (*expected == BigInt(oracle.order));
    } else {
        j["predicted_order"] = nullptr;
        j["agrees"] = nullptr;
    }
    j["stabilizer_order"] = oracle.stabilizer_order;
    j["elements_outside_known_group"] = elements_outside_known_group;
    return j.dump();
}

}  // namespace hnk
