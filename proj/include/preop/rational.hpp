#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace preop {

using Rational = mpq_class;

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace preop
