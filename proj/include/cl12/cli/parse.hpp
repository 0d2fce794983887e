#pragma once

// Text input for multivectors.
//
// Literal grammar:   literal := ["+"|"-"] term (("+"|"-") term)*
//                    term    := coeff | [coeff] "e" digit(0-7)
// or a JSON array of 8 numbers. Whitespace is allowed between tokens, so
// printed output such as "0.25 + 0.25 e1 - 0.25 e6" reads back. In a
// coefficient, an exponent needs a sign or an uppercase E ("1e-05",
// "2E3"): "2e3" is 2 e3.
//
// Expressions add "*", parentheses and the functions conj, prime, cre,
// cim, inv and pinv on top of literal terms.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cl12/multivector.hpp"

namespace cl12::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Multivector parse_literal(std::string_view text);

/// Evaluates an expression. inv() throws SingularElement on singular input;
/// tol is the singularity tolerance used by inv() and pinv().
Multivector evaluate_expression(std::string_view text, double tol = kDefaultTol);

}  // namespace cl12::cli
