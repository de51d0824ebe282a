#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace phyloag {

// Arbitrary-precision rationals and integers. mpq_class keeps values
// reduced with a positive denominator as long as inputs are canonicalized,
// which parse_rat and make_rat guarantee.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);

// Parses "p", "-p", "p/q" (q != 0). Throws ParseError.
Rat parse_rat(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& value);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

}  // namespace phyloag
