#include "integer.hpp"

#include <cctype>

#include "errors.hpp"

namespace hbn {

Integer binomial(long n, long m) {
  if (m < 0 || n < 0 || m > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return result;
}

Integer factorial(long n) {
  if (n < 0) fail(errc::domain, "factorial of negative argument");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer factorial_quotient(long a, long b) {
  if (b < 0 || b > a) fail(errc::domain, "factorial quotient needs 0 <= b <= a");
  Integer result = 1;
  for (long v = b + 1; v <= a; ++v) result *= v;
  return result;
}

Integer parse_integer(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace; mpz rejects interior garbage itself.
  auto begin = s.find_first_not_of(" \t");
  auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) fail(errc::parse, "empty numeral");
  s = s.substr(begin, end - begin + 1);
  if (s == "+" || s == "-") fail(errc::parse, "bare sign is not a numeral: '" + text + "'");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (i == 0 && (c == '+' || c == '-')) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(errc::parse, "malformed integer: '" + text + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);  // mpz accepts '-' but not '+'
  return Integer(s, 10);
}

bool divides(const Integer& divisor, const Integer& value) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

Integer exact_quotient(const Integer& value, const Integer& divisor) {
  if (divisor == 0 || !divides(divisor, value)) {
    fail(errc::internal,
         "expected exact division: " + to_decimal(value) + " / " + to_decimal(divisor));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

}  // namespace hbn
