#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grassmor {

using Rational = mpq_class;
using Integer = mpz_class;

// "3", "-1/2"
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q"; throws InvalidInput on garbage or zero denominators.
Rational parse_rational(std::string_view text);

}  // namespace grassmor
