#ifndef CHIOS_RATIONAL_HPP
#define CHIOS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace chios {

/// Exact arbitrary-precision rational. All arithmetic in the library is
/// exact; no floating point anywhere.
using Rational = mpq_class;

/// Parses "p/q" or a plain integer (optional sign). Rejects zero
/// denominators and any trailing garbage.
Rational parse_rational(const std::string& text);

/// Canonical rendering: reduced, denominator positive, "p" when q = 1,
/// otherwise "p/q".
std::string rational_str(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

} // namespace chios

#endif
