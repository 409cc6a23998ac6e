#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mdiag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ConfigError.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" text; inverse of parse_rational.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace mdiag
