#pragma once

// JSON views of the report types. Key order is fixed (ordered_json) and every
// collection is emitted in the library's deterministic order, so output is
// byte-stable across runs and worker counts.

#include "dot.hpp"
#include "theorems.hpp"

namespace secmod {

inline json module_json(const FinModule& m) {
    return json{{"ring", m.ring},
                {"invariant_factors", m.factors},
                {"order", m.order()},
                {"expr", print_module_expr(m)}};
}

inline json submodule_json(const Submodule& s) {
    return json{{"gens", detail::gens_json(s)}, {"order", s.order()}};
}

inline json classification_json(const ClassificationReport& rep) {
    json rows = json::array();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& f = rep.rows[i];
        rows.push_back(json{
            {"gens", detail::gens_json(rep.lattice.nodes[i])},
            {"order", rep.lattice.nodes[i].order()},
            {"flags",
             json{{"second", f.second},
                  {"secondary", f.secondary},
                  {"second_radical_submodule", f.second_radical_submodule},
                  {"two_abs_second", f.two_abs_second},
                  {"strongly_two_abs_second", f.strongly_two_abs_second},
                  {"two_abs_secondary", f.two_abs_secondary},
                  {"strongly_two_abs_secondary", f.strongly_two_abs_secondary},
                  {"two_abs_submodule", f.two_abs_submodule},
                  {"two_abs_primary_submodule", f.two_abs_primary_submodule},
                  {"prime", f.prime},
                  {"completely_irreducible", f.completely_irreducible},
                  {"minimal", f.minimal}}}});
    }
    return json{{"schema_version", "1"},
                {"module", module_json(rep.lattice.parent)},
                {"module_flags",
                 json{{"comultiplication", rep.comultiplication}, {"cocyclic", rep.cocyclic}}},
                {"rows", rows}};
}

inline json lattice_json(const SubLattice& l) {
    json nodes = json::array();
    for (int i = 0; i < l.size(); ++i) {
        nodes.push_back(json{
            {"index", i},
            {"gens", detail::gens_json(l.nodes[static_cast<size_t>(i)])},
            {"order", l.nodes[static_cast<size_t>(i)].order()},
            {"flags",
             json{{"completely_irreducible", static_cast<bool>(l.flag_ci[static_cast<size_t>(i)])},
                  {"prime", static_cast<bool>(l.flag_prime[static_cast<size_t>(i)])},
                  {"second", static_cast<bool>(l.flag_second[static_cast<size_t>(i)])},
                  {"minimal", static_cast<bool>(l.flag_minimal[static_cast<size_t>(i)])}}}});
    }
    json edges = json::array();
    for (int i = 0; i < l.size(); ++i)
        for (int j : l.covers_above[static_cast<size_t>(i)]) edges.push_back(json::array({i, j}));
    return json{{"schema_version", "1"},
                {"module", module_json(l.parent)},
                {"nodes", nodes},
                {"cover_edges", edges}};
}

inline json theorem_report_json(const TheoremReport& r) {
    return json{{"theorem", r.theorem_id},
                {"module", module_json(r.module)},
                {"instances_checked", r.instances_checked},
                {"vacuous_instances", r.vacuous_instances},
                {"violations", r.violations}};
}

inline json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

} // namespace secmod
