#pragma once

// Text form of exact numbers, used by scenario files and reports:
//
//   RAT  := INT | INT "/" POSINT
//   QUAD := RAT | RAT ("+"|"-") RAT "*sqrt(" POSINT ")"
//   CPLX := QUAD | QUAD ("+"|"-") QUAD "*i"
//
// Whitespace is insignificant.  Printing always emits the canonical spelling
// (reduced rationals, no redundant zero parts), and parse(print(x)) == x.

#include <string>
#include <string_view>

#include "cstar/quad.hpp"

namespace cstar {

std::string ratLit(const Rational& r);
std::string quadLit(const QuadReal& x);
std::string cplxLit(const QuadComplex& z);

Rational parseRatLit(std::string_view text);
QuadReal parseQuadLit(std::string_view text, const FieldContext& ctx);
QuadComplex parseCplxLit(std::string_view text, const FieldContext& ctx);

}  // namespace cstar
