#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cuntzcf {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& n);

/// Floor of the square root; n must be non-negative.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Floor division with a positive or negative divisor.
BigInt floor_div(const BigInt& n, const BigInt& d);

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace cuntzcf
