#pragma once

#include <stdexcept>
#include <string>

#include "gla/magma.hpp"

namespace gla {

struct ParseError : std::runtime_error {
    int line = 0, col = 0;  // 1-based; 0 when not tied to a position
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

// Line-oriented presentation format, '#' starts a comment:
//   dgl NAME
//   gen IDENT DEGREE          (IDENT may be a suspension form s(u,v))
//   diff IDENT = EXPR
// Generators are collected first, so a boundary may reference any generator
// of the file.  Boundary degree mismatches are reported with the line of the
// offending diff.
DglPresentation parse_dgl(const std::string& text);

// EXPR := ['+'|'-'] TERM (('+'|'-') TERM)*
// TERM := [RATIONAL '*'] FACTOR
// FACTOR := IDENT | 's(' IDENT ',' IDENT ')' | '[' EXPR ',' EXPR ']'
// RATIONAL := INT ['/' INT]
LieElement parse_lie_expr(const std::string& text, const GenSetPtr& set);

// Same term structure with the non-associative product:
// MFACTOR := IDENT | 's(' IDENT ',' IDENT ')' | '(' MEXPR ')'
// MPROD := MFACTOR ['*' MFACTOR]    (longer chains must be parenthesized)
MagmaElement parse_magma_expr(const std::string& text, const GenSetPtr& set);

}  // namespace gla
