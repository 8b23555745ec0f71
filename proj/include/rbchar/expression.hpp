#pragma once

#include "rbchar/element.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbchar {

/// Syntax error in element or expression text; position is a 0-based byte
/// offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string input, std::size_t position);

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }
  const std::string& input() const { return input_; }
  /// The input with a caret line under the offending position.
  std::string diagnostic() const;

 private:
  std::string reason_;
  std::string input_;
  std::size_t position_;
};

/// Evaluates an expression over the algebra:
///
///   expr    := ['+'|'-'] product (('+'|'-') product)*
///   product := unary ('*' unary)*          '*' is the diamond product
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := number 'a' index | number | 'a' index
///            | 'P' '(' expr ')' | '(' expr ')'
///   number  := digits ('/' digits)?
///
/// A bare number c denotes c·a0. Plain sums of terms such as `2a1 + 2a0` are
/// the element text format used throughout the CLI and JSON files.
RBElement parse_expression(const AlgebraCtx& ctx, std::string_view text);

/// Splits a generator list on ';' and parses each entry.
std::vector<RBElement> parse_element_list(const AlgebraCtx& ctx, std::string_view text);

}  // namespace rbchar
