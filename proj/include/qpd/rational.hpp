#pragma once

#include <gmpxx.h>

#include <string>

namespace qpd {

// Exact rational coefficients. Every equality test in the library is
// decidable; nothing is ever rounded.
using Rational = mpq_class;

// Parses "p" or "p/q" with optional leading '-'. Throws SyntaxError on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical "p" / "p/q" rendering.
std::string to_string(const Rational& value);

} // namespace qpd
