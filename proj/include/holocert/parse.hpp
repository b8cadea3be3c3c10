#pragma once

// Text-facing layer: the arithmetic expression grammar for rational
// functions, the expansion literal syntax, and the line-oriented
// recurrence file format.
//
// Expression grammar (whitespace-insensitive):
//   integer literals, one variable name, + - * / ^ with standard
//   precedence, ^ binding tightest with integer exponents, unary minus,
//   parentheses.
//
// Expansion literals:
//   1 + (2)/n^2 - (L)/n^3 + O(n^-4)
// where L stands for log n, each coefficient is a parenthesized rational
// expression in L (bare integers and a bare L are also accepted), and
// exponents are integers or parenthesized fractions like (7/2).
//
// Recurrence files are UTF-8, line oriented, `key: value`, with `#`
// comments. Keys: name (optional), order, coeff1..coeffd, lhs (optional
// common left-hand factor the coefficients are divided by), initial
// (comma-separated exact rationals), offset (optional, default 0),
// scale (optional). Unknown keys are rejected.

#include "holocert/expansion.hpp"
#include "holocert/ratfunc.hpp"
#include "holocert/recurrence.hpp"

#include <string>

namespace holocert {

RationalFunction parse_expression(const std::string& text, const std::string& var = "n");

Expansion parse_expansion(const std::string& text);

Recurrence parse_recurrence_text(const std::string& text);

Recurrence load_recurrence_file(const std::string& path);

std::string print_expansion(const Expansion& e);

}  // namespace holocert
