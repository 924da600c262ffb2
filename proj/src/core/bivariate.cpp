#include "permgraph/bivariate.hpp"

namespace permgraph {

BivariatePolynomial BivariatePolynomial::monomial(std::size_t a_exp, std::size_t b_exp, const BigInt& c) {
  BivariatePolynomial p;
  p.add_term(a_exp, b_exp, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::one_plus_b_power(std::size_t k) {
  BivariatePolynomial p;
  for (std::size_t j = 0; j <= k; ++j) p.add_term(0, j, binomial(k, j));
  return p;
}

void BivariatePolynomial::add_term(std::size_t a_exp, std::size_t b_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponents{a_exp, b_exp}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt BivariatePolynomial::coefficient(std::size_t a_exp, std::size_t b_exp) const {
  const auto it = terms_.find(Exponents{a_exp, b_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePolynomial::uniform_sign() const {
  if (terms_.empty()) return 0;
  const int first = sgn(terms_.begin()->second);
  for (const auto& [e, c] : terms_)
    if (sgn(c) != first) return 0;
  return first;
}

Rational BivariatePolynomial::evaluate(const Rational& a, const Rational& b) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += Rational(c) * power(a, e.a) * power(b, e.b);
  return total;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.a, e.b, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.a, e.b, BigInt(-c));
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& x, const BivariatePolynomial& y) {
  BivariatePolynomial out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(ex.a + ey.a, ex.b + ey.b, BigInt(cx * cy));
  return out;
}

BivariatePolynomial BivariatePolynomial::shifted(std::size_t da, std::size_t db) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.a + da, e.b + db}, c);
  return out;
}

std::string BivariatePolynomial::to_string(const std::string& a_name, const std::string& b_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    auto append = [&](const std::string& name, std::size_t exp) {
      if (exp == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (exp > 1) factors += "^" + std::to_string(exp);
    };
    append(a_name, e.a);
    append(b_name, e.b);
    if (factors.empty()) out += permgraph::to_string(magnitude);
    else if (magnitude == 1) out += factors;
    else out += permgraph::to_string(magnitude) + "*" + factors;
  }
  return out;
}

nlohmann::json BivariatePolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"a", e.a}, {"b", e.b}, {"c", permgraph::to_string(c)}});
  return {{"terms", std::move(terms)}};
}

}  // namespace permgraph
