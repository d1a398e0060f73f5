#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parlearn {

/// Exact arbitrary-precision rational. GMP keeps every result reduced with a
/// positive denominator.
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace parlearn
