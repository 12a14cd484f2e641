#pragma once

#include <gmpxx.h>

#include <string>

namespace bosonorder {

// Arbitrary-precision integers and rationals. mpq_class values produced by
// arithmetic are canonical (lowest terms, positive denominator); use make_rat
// when building one from a numerator/denominator pair.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

ExactRat make_rat(const ExactInt& numerator, const ExactInt& denominator);

// Parses "p", "-p", "p/q" or a decimal literal such as "0.25" exactly.
ExactRat parse_rat(const std::string& text);

std::string to_string(const ExactInt& value);
std::string to_string(const ExactRat& value);

// m (m-1) ... (m-s+1); the empty product 1 when s == 0.
ExactInt falling_factorial(const ExactInt& m, unsigned s);

ExactInt factorial(unsigned n);

// C(n, k), zero when k < 0 or k > n.
ExactInt binomial(unsigned n, long k);

// C(top, k) for an arbitrary integer top: falling_factorial(top, k) / k!.
ExactInt binomial_signed(const ExactInt& top, unsigned k);

// Generalized binomial coefficient C(alpha, k) for rational alpha.
ExactRat binomial_rat(const ExactRat& alpha, unsigned k);

ExactRat pow(const ExactRat& base, unsigned exponent);

bool is_integer(const ExactRat& value);

// (-1)^k as an integer.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace bosonorder
