#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "permgraph/exact.hpp"

namespace permgraph {

/// Exact polynomial in two variables (a, b) with integer coefficients. Zero
/// coefficients are never stored. Iteration and printing use the canonical
/// monomial order: b-exponent major, a-exponent minor.
class BivariatePolynomial {
 public:
  struct Exponents {
    std::size_t a = 0;
    std::size_t b = 0;

    friend auto operator<=>(const Exponents& x, const Exponents& y) {
      if (auto c = x.b <=> y.b; c != 0) return c;
      return x.a <=> y.a;
    }
    friend bool operator==(const Exponents&, const Exponents&) = default;
  };
  using Terms = std::map<Exponents, BigInt>;

  BivariatePolynomial() = default;
  static BivariatePolynomial monomial(std::size_t a_exp, std::size_t b_exp, const BigInt& c = 1);
  /// (1 + b)^k.
  static BivariatePolynomial one_plus_b_power(std::size_t k);

  void add_term(std::size_t a_exp, std::size_t b_exp, const BigInt& c);
  BigInt coefficient(std::size_t a_exp, std::size_t b_exp) const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Every stored coefficient has the same strict sign (+1 or -1); 0 for
  /// the zero polynomial or mixed signs.
  int uniform_sign() const;

  Rational evaluate(const Rational& a, const Rational& b) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BigInt& scalar);
  friend BivariatePolynomial operator+(BivariatePolynomial x, const BivariatePolynomial& y) {
    return x += y;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial x, const BivariatePolynomial& y) {
    return x -= y;
  }
  friend BivariatePolynomial operator*(BivariatePolynomial x, const BigInt& s) { return x *= s; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& x, const BivariatePolynomial& y);

  /// Multiplies by a^da b^db.
  BivariatePolynomial shifted(std::size_t da, std::size_t db) const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Human-readable, e.g. "a*b^8 + 4*a*b^9 + ..."; variable names are
  /// configurable.
  std::string to_string(const std::string& a_name = "a", const std::string& b_name = "b") const;
  /// {"terms":[{"a":1,"b":8,"c":"1"},...]} in canonical order.
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

}  // namespace permgraph
