#include "epsnet/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace epsnet {

Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool any = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i]);
    any = true;
    ++i;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i]);
      ++frac_digits;
      any = true;
      ++i;
    }
  }
  long exponent = 0;
  if (any && i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed decimal: " + text);
    long e = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (e > 100000) throw std::invalid_argument("exponent out of range: " + text);
      e = e * 10 + (text[i] - '0');
      ++i;
    }
    exponent = exp_neg ? -e : e;
  }
  if (!any || i != n) throw std::invalid_argument("malformed decimal: " + text);

  if (digits.empty()) digits = "0";
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long shift = exponent - frac_digits;
  mpz_class num = mantissa;
  mpz_class den = 1;
  mpz_class ten = 10;
  if (shift > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    num *= scale;
  } else if (shift < 0) {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double x) { return Rational(x); }

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace epsnet
