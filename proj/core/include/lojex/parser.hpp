#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lojex/poly.hpp"

namespace lojex {

struct ParseOptions {
  /// Largest exponent allowed on any variable, in literals or after expansion.
  std::uint32_t exponent_cap = 1u << 16;
};

/// Parses a polynomial over the declared variables and fully expands it.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := number ('/' number)? | identifier | '(' expr ')'
///
/// Implicit multiplication is rejected. Throws ParseError with a byte offset.
Poly parse_poly(std::string_view text, std::span<const std::string> vars,
                const ParseOptions& options = {});

/// Splits "x,y,z" into names, validating each as an identifier.
std::vector<std::string> parse_variable_list(std::string_view csv);

}  // namespace lojex
