#include "catkit/laurent.hpp"

#include <ostream>
#include <sstream>

#include "catkit/errors.hpp"

namespace catkit {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw DomainError("inverse of non-unit Laurent polynomial " + str());
  const auto& [e, c] = *terms_.begin();
  return monomial(c, -e);
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  LaurentPoly base = exponent < 0 ? inverse() : *this;
  unsigned n = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  LaurentPoly result(1);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  if (factor == 0) throw DomainError("substitute_power: factor must be nonzero");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::compress_exponents(int divisor) const {
  if (divisor == 0) throw DomainError("compress_exponents: divisor must be nonzero");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0)
      throw DomainError("exponent " + std::to_string(e) + " not divisible by " + std::to_string(divisor));
    out.add_term(e / divisor, c);
  }
  return out;
}

Rational LaurentPoly::evaluate(const Rational& v) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational power(1);
    const Rational base = e < 0 ? Rational(1) / v : v;
    for (int k = 0; k < std::abs(e); ++k) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

Rational LaurentPoly::evaluate_q(const Rational& q) const { return compress_exponents(2).evaluate(q); }

std::string LaurentPoly::str(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string LaurentPoly::str_in_q() const { return compress_exponents(2).str("q"); }

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  const int b_low = b.min_exponent();
  const int b_high = b.max_exponent();
  const BigInt lead = b.coeff(b_high);
  LaurentPoly rem = a;
  LaurentPoly quotient;
  // Long division from the top degree down; the remainder's span must shrink each step.
  while (!rem.is_zero()) {
    const int r_high = rem.max_exponent();
    if (rem.max_exponent() - rem.min_exponent() < b_high - b_low) return std::nullopt;
    const BigInt c = rem.coeff(r_high);
    if (c % lead != 0) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(c / lead, r_high - b_high);
    quotient += step;
    rem -= step * b;
  }
  return quotient;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace catkit
