#pragma once

// Hasse diagram emitter: one node per submodule labeled with its canonical
// generators and order, edges only for cover relations, class flags rendered
// as node attributes.

#include <ostream>
#include <sstream>

#include "lattice.hpp"

namespace secmod {

inline std::string format_generators(const Submodule& s) {
    auto gens = s.generators();
    if (gens.empty()) return "0";
    std::ostringstream os;
    for (size_t g = 0; g < gens.size(); ++g) {
        if (g) os << ", ";
        os << "(";
        for (size_t c = 0; c < gens[g].size(); ++c) {
            if (c) os << ",";
            os << gens[g][c];
        }
        os << ")";
    }
    return os.str();
}

inline void write_dot(std::ostream& os, const SubLattice& l, const std::string& name = "submodule_lattice") {
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (int i = 0; i < l.size(); ++i) {
        const Submodule& s = l.nodes[static_cast<size_t>(i)];
        os << "  n" << i << " [label=\"" << format_generators(s) << "\\n|N|=" << s.order() << "\""
           << ", order=\"" << s.order() << "\""
           << ", completely_irreducible=\"" << int(l.flag_ci[static_cast<size_t>(i)]) << "\""
           << ", prime=\"" << int(l.flag_prime[static_cast<size_t>(i)]) << "\""
           << ", second=\"" << int(l.flag_second[static_cast<size_t>(i)]) << "\""
           << ", minimal=\"" << int(l.flag_minimal[static_cast<size_t>(i)]) << "\"];\n";
    }
    for (int i = 0; i < l.size(); ++i)
        for (int j : l.covers_above[static_cast<size_t>(i)])
            os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
}

} // namespace secmod
