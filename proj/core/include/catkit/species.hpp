#pragma once

#include <map>
#include <vector>

#include "catkit/partition.hpp"
#include "catkit/serialize.hpp"

namespace catkit::species {

/// A class function on the symmetric group S_n, keyed by cycle type.
/// Every partition of n is present as a key.
class ClassFunction {
 public:
  static ClassFunction zero(int n);
  static ClassFunction constant(int n, const Rational& value);
  /// The degree-0 function with value 1, the unit of the Cauchy product.
  static ClassFunction unit() { return constant(0, 1); }
  static ClassFunction sign(int n);
  /// Partitions missing from `values` are set to 0; throws DimensionError on a
  /// key that is not a partition of n.
  static ClassFunction from_values(int n, const std::map<Partition, Rational>& values);

  int degree() const { return n_; }
  const Rational& at(const Partition& lambda) const;
  void set(const Partition& lambda, const Rational& value);
  const std::map<Partition, Rational>& values() const { return values_; }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::map<Partition, Rational> values_;
};

/// (f.g)(lambda) = sum over sub-multisets mu of lambda with |mu| = deg f of
/// prod_i C(m_i(lambda), m_i(mu)) f(mu) g(lambda - mu).
ClassFunction cauchy_product(const ClassFunction& f, const ClassFunction& g);

/// The same product by brute force: for one permutation sigma of each cycle
/// type, sum f(sigma|S) g(sigma|complement) over sigma-invariant subsets S.
ClassFunction cauchy_product_by_subsets(const ClassFunction& f, const ClassFunction& g);

/// Pointwise product. Throws DimensionError on a degree mismatch.
ClassFunction hadamard_product(const ClassFunction& f, const ClassFunction& g);

inline constexpr int kDefaultTruncation = 8;

/// Symmetric function in the power-sum basis, truncated above degree maxdeg.
class SymFunc {
 public:
  explicit SymFunc(int maxdeg = kDefaultTruncation);
  static SymFunc constant(const Rational& c, int maxdeg = kDefaultTruncation);
  /// p_lambda
  static SymFunc power_sum(const Partition& lambda, int maxdeg = kDefaultTruncation);

  int maxdeg() const { return maxdeg_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coeff(const Partition& lambda) const;
  /// Adds c p_lambda; terms above maxdeg are dropped.
  void add(const Partition& lambda, const Rational& c);
  /// Homogeneous part of degree n.
  SymFunc degree_part(int n) const;
  bool is_zero() const { return terms_.empty(); }

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const Rational& c) const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  int maxdeg_;
  std::map<Partition, Rational> terms_;
};

/// ch(f) = sum_lambda f(lambda) p_lambda / z_lambda. Throws DimensionError when deg f > maxdeg.
SymFunc char_map(const ClassFunction& f, int maxdeg = kDefaultTruncation);

/// Inverse of char_map on the homogeneous part of degree n.
ClassFunction char_inverse(const SymFunc& f, int n);

/// Product truncated at the smaller of the two truncation degrees.
SymFunc sym_mul(const SymFunc& a, const SymFunc& b);

/// F o G, with p_k o G = G(p_i -> p_(ki)). Throws DomainError if G has a constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// E = exp(sum_k p_k / k) = sum_lambda p_lambda / z_lambda, the species of sets.
SymFunc exp_series(int maxdeg = kDefaultTruncation);
/// E - 1, the species of nonempty sets.
SymFunc exp_plus_series(int maxdeg = kDefaultTruncation);

/// Labelled counts |M[n]| for n = 0..upto: n! times the coefficient of p_1^n.
std::vector<BigInt> species_counts(const SymFunc& f, int upto);

// {"[2,1]": "1/2", ...}, keys in the order of the underlying map.
Json to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j, int n);
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j, int maxdeg = kDefaultTruncation);
Partition partition_from_string(const std::string& text);

}  // namespace catkit::species
