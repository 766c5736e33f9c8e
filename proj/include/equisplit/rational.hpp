#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equisplit {

// Exact rationals, always canonical (reduced, positive denominator).
using Rational = mpq_class;

// "num" or "num/den".
std::string to_string(const Rational& q);

// Accepts "num" or "num/den" with an optional leading sign.
Rational parse_rational(std::string_view text);

Rational make_rational(const mpz_class& num, const mpz_class& den);

}  // namespace equisplit
