#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "catkit/rational.hpp"

namespace catkit::species {

/// Integer partition with parts sorted in weakly decreasing order.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts the parts; throws DomainError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  /// m_i: multiplicity of each part size.
  std::map<int, int> multiplicities() const;
  /// z_lambda = prod_i i^(m_i) m_i!, the centralizer order of a permutation of this cycle type.
  BigInt z() const;
  /// Number of permutations of {1..n} with this cycle type, n! / z.
  BigInt class_size() const;

  std::string str() const;  // "[3,1,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partition union (multiset sum of parts).
Partition operator+(const Partition& a, const Partition& b);

/// All partitions of n, in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

/// Cycle type of a permutation given as images on {0..n-1}.
Partition cycle_type(const std::vector<int>& perm);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace catkit::species
