#pragma once

// Module expressions: sums of cyclic atoms, e.g. "Z6 + Z10" or "Z2^3".
// Grammar:  expr := term ('+' term)* ;  term := 'Z' integer ('^' integer)?
// Whitespace is insignificant. Z1 atoms denote trivial summands and vanish;
// Z0 is rejected. The result is canonicalized by make_module.

#include <cctype>
#include <string>

#include "module.hpp"

namespace secmod {

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parse a module expression; ring_modulus 0 defaults to the exponent.
inline FinModule parse_module_expr(const std::string& text, i64 ring_modulus = 0) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_int = [&]() -> i64 {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an integer", pos);
        i64 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 100000000) throw ParseError("integer too large", pos);
            ++pos;
        }
        return v;
    };

    std::vector<i64> factors;
    bool first = true;
    while (true) {
        skip_ws();
        if (first && pos >= text.size()) throw ParseError("empty module expression", pos);
        if (!first) {
            if (pos >= text.size()) break;
            if (text[pos] != '+') throw ParseError("expected '+'", pos);
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z'))
            throw ParseError("expected a cyclic atom 'Z<k>'", pos);
        ++pos;
        std::size_t atom_pos = pos;
        i64 k = parse_int();
        if (k == 0) throw ParseError("Z0 does not denote a finite abelian group", atom_pos);
        i64 e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            e = parse_int();
        }
        for (i64 i = 0; i < e; ++i)
            if (k >= 2) factors.push_back(k);
        first = false;
    }
    skip_ws();
    if (pos < text.size()) throw ParseError("trailing input", pos);
    return make_module(ring_modulus, factors);
}

/// Canonical printer: "Zd1 + Zd2 + ..." over the invariant factors; the zero
/// module prints as "Z1". parse(print(m)) round-trips for the default ring.
inline std::string print_module_expr(const FinModule& m) {
    if (m.is_zero_module()) return "Z1";
    std::string out;
    for (size_t i = 0; i < m.factors.size(); ++i) {
        if (i) out += " + ";
        out += "Z" + std::to_string(m.factors[i]);
    }
    return out;
}

} // namespace secmod
