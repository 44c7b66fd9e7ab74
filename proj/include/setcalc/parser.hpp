#pragma once

#include "setcalc/term.hpp"

#include <string>
#include <string_view>

namespace setcalc {

/// Parses the term grammar:
///
///   expr   := single ('u' single)*          (left-associative union)
///   single := 'P' '(' expr ')'
///           | 'P^' INT '(' expr ')'         (INT nested powersets)
///           | 'P^-' INT '(' expr ')'        (INT nested inverse powersets)
///           | 'Pinv' '(' expr ')'
///           | atom
///   atom   := '{' [expr {',' expr}] '}' | INT | 'N'
///
/// Whitespace-insensitive. An integer atom is the von Neumann numeral
/// (capped at 12). Set literal elements must be Zermelo subexpressions: no
/// 'N' and no inverse powerset anywhere inside; they are evaluated to
/// concrete sets at parse time. Errors carry 1-based line/column.
SetTerm parse_term(std::string_view text);

/// Canonical text: HF literals in canonical order with no whitespace,
/// operator chains collapsed ("P^3(...)", "P^-2(...)"), union parts joined
/// with " u ". parse_term(print_term(t)) == t for every term.
std::string print_term(const SetTerm& t);

/// The normal form printed as a term, Zermelo part first, components in
/// well-represented order; an empty Zermelo part is omitted when components
/// are present.
std::string print_normal_form(const NormalForm& nf);

} // namespace setcalc
