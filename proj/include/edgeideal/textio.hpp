#pragma once

#include <string>
#include <string_view>

#include "edgeideal/ideal.hpp"
#include "edgeideal/monomial.hpp"
#include "edgeideal/varset.hpp"

namespace edgeideal {

// Canonical text form: factors in ambient variable order joined by '*',
// exponents >= 2 written with '^' ("x1^2*x2^3"); the constant is "1".
std::string to_string(const Monomial& m, const VarSet& vars);

// Canonical text form: "(g1, g2, ...)" with generators in canonical order;
// the zero ideal prints as "(0)".
std::string to_string(const MonomialIdeal& ideal);

// Parses a monomial such as "x1^2*x2^3" over a known variable set.
// Throws ParseError (with byte offset) on malformed input or unknown names.
Monomial parse_monomial(std::string_view text, const VarSet& vars);

// Parses an ideal such as "(x1^2*x2^3, x2^4*x3)" over a known variable set.
MonomialIdeal parse_ideal(std::string_view text, VarSetPtr vars);

// Same, but infers the ambient variable set from the text: variables are
// ordered by first appearance.  Throws ParseError if no variable occurs
// (the zero ideal "(0)" needs an explicit ambient set).
MonomialIdeal parse_ideal(std::string_view text);

}  // namespace edgeideal
