#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blw/syntax.hpp"

namespace blw {

/// Syntax error with the 0-based input position it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := tens ("&" tens)*
//   tens    := atom ("*" atom)*
//   atom    := ident | "bot" | "top" | "(" formula ")"
//   sequent := (formula ("," formula)*)? "|-" formula
Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

}  // namespace blw
