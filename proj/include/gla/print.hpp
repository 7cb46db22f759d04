#pragma once

#include <string>

#include "gla/dgl.hpp"
#include "gla/magma.hpp"

namespace gla {

// Bracket tree: "[a,[b,c]]"; leaves by name (suspensions as "s(v,w)").
std::string print_tree(const Tree& t, const GeneratorSet& set);

// Magma tree: "a*(b*c)", "(a*b)*c"; internal children are parenthesized.
std::string print_magma_tree(const Tree& t, const GeneratorSet& set);

// Deterministic rendering: "0" for zero, terms in canonical order,
// coefficients as reduced fractions.  Reparses to an equal element.
std::string print_element(const LieElement& x);
std::string print_magma(const MagmaElement& x);

// Presentation file text; parse_dgl(print_presentation(p)) equals p.
std::string print_presentation(const DglPresentation& p);

}  // namespace gla
