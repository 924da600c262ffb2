#include "permgraph/exact.hpp"

#include <cctype>
#include <string>

#include "permgraph/error.hpp"

namespace permgraph {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) fail(ErrorCode::parse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) fail(ErrorCode::domain, "zero denominator in '" + std::string(whole) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp_value = parse_integer(text.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000)
      fail(ErrorCode::domain, "exponent out of range in '" + std::string(whole) + "'");
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational power(const Rational& base, std::size_t exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

BigInt power(const BigInt& base, std::size_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

BigInt factorial(std::size_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace permgraph
