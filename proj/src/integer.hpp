#pragma once

#include <gmpxx.h>

#include <string>

namespace hbn {

// All genus-like and degree-like quantities are exact integers of arbitrary
// size; only tuple ranks (k) and twist degrees (p) are machine ints.
using Integer = mpz_class;

// C(n, m), with the convention that C(n, m) = 0 whenever m < 0 or m > n.
Integer binomial(long n, long m);

// n! for n >= 0.
Integer factorial(long n);

// a! / b! for 0 <= b <= a, computed as the product (b+1)(b+2)...a.
Integer factorial_quotient(long a, long b);

// Parses an optionally signed base-10 numeral; rejects everything else.
Integer parse_integer(const std::string& text);

bool divides(const Integer& divisor, const Integer& value);

// value / divisor when the division is exact; errc::internal otherwise.
Integer exact_quotient(const Integer& value, const Integer& divisor);

std::string to_decimal(const Integer& value);

}  // namespace hbn
