#pragma once

#include <map>
#include <optional>
#include <string>

#include "catkit/rational.hpp"

namespace catkit {

/// Exact Laurent polynomial in one variable v with integer (arbitrary precision)
/// coefficients. The quantum parameter is q = v^2 throughout the library, so
/// half-integer powers of q stay polynomial.
///
/// Zero coefficients are never stored; equality is equality of coefficient maps.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers promote implicitly
  LaurentPoly(int constant) : LaurentPoly(static_cast<long>(constant)) {}  // NOLINT
  explicit LaurentPoly(const BigInt& constant);
  explicit LaurentPoly(Terms terms);

  /// c * v^exponent
  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  /// v^exponent
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  /// q^k = v^(2k)
  static LaurentPoly q(int k = 1) { return monomial(1, 2 * k); }

  const Terms& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int min_exponent() const;
  int max_exponent() const;
  std::size_t size() const { return terms_.size(); }

  /// True for +-v^k, the units of Z[v, v^-1].
  bool is_unit() const;
  /// Inverse of a unit; throws DomainError otherwise.
  LaurentPoly inverse() const;
  /// Integer power; negative exponents only for units.
  LaurentPoly pow(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// v -> v^factor (factor may be negative).
  LaurentPoly substitute_power(int factor) const;
  /// v^e -> v^(e/divisor); throws DomainError unless every exponent is divisible.
  LaurentPoly compress_exponents(int divisor) const;

  Rational evaluate(const Rational& v) const;
  /// Evaluates a polynomial in q = v^2 at an explicit q; requires even exponents.
  Rational evaluate_q(const Rational& q) const;

  /// Descending exponents with explicit signs, e.g. "-v^4 + 2v - 1 + v^-3".
  std::string str(std::string_view variable = "v") const;
  /// Same format in the variable q; requires even exponents in v.
  std::string str_in_q() const;

 private:
  void add_term(int exponent, const BigInt& coeff);
  Terms terms_;
};

/// Exact quotient a / b in Z[v, v^-1], or nullopt when b does not divide a.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace catkit
