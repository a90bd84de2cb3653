#pragma once

// Front-end grammar for the command line:
//
//   INT (('+'|'-') INT)* ('mod' INT)?   sum / signed expression / modular
//   INT ('*' INT)+                      product
//   'prime' INT                         primality test
//
// Whitespace-insensitive, decimal integers only. '*' cannot mix with '+'
// or '-'. A signed expression may start with '-'; the front-end rewrites
// it as 0 - a1.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tilearith/specs.hpp"

namespace tilearith {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), pos(position) {}
  std::size_t pos = 0;  // byte offset into the input text
};

ExpressionSpec parse(const std::string& text);

// Canonical rendering; parse(print_spec(s)) reproduces s.
std::string print_spec(const ExpressionSpec& spec);

}  // namespace tilearith
