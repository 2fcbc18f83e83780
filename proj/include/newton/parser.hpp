#pragma once

#include <cstddef>
#include <string>

#include "newton/sparse_polynomial.hpp"

namespace newton {

struct parse_error : error {
  parse_error(const std::string& msg, std::size_t offset)
      : error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// Parses the polynomial grammar:
//   expr    := ('+'|'-')? term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' nat)?
//   base    := 'z' | 'w' | literal | '(' expr ')'
//   literal := rational | rational? 'i'
// Rationals are integer or integer '/' integer; whitespace is
// insignificant; multiplication is always explicit via '*'.
// Complex literals like (1+2i) come out of the parenthesized-expr rule.
SparsePolynomial parse_polynomial(const std::string& text);

// Deterministic rendering, terms sorted by (l+m, l) descending.
// parse_polynomial(render(f)) == f.
std::string render(const SparsePolynomial& f);

// Parses a single Gaussian-rational value, e.g. "2", "-3/4", "1+2i",
// "2.5" (finite decimals are exact rationals).
GaussianRational parse_gaussian_rational(const std::string& text);

}  // namespace newton
