#pragma once

#include <string>

#include "covers/ratfunc.hpp"

namespace covers::expr {

struct ParseError : Error {
  ParseError(const std::string& what, size_t position)
      : Error(what + " at position " + std::to_string(position)),
        pos(position) {}
  size_t pos;
};

// Grammar (EBNF):
//   expr   = term { ("+" | "-") term } ;
//   term   = factor { ("*" | "/") factor } ;
//   factor = [ "-" ] base [ "^" integer ] ;
//   base   = integer | "y" | "zeta" "(" integer ")" | "(" expr ")" ;
// Whitespace is insignificant. zeta(N) is a primitive N-th root of unity;
// all zeta orders in one expression are lifted to their lcm (at least
// min_order). Exponents are signed integer literals.
funfield::RatFunc parse_ratfunc(const std::string& text, long min_order = 1);

}  // namespace covers::expr
