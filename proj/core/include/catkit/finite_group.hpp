#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "catkit/rational.hpp"
#include "catkit/serialize.hpp"

namespace catkit::mackey {

/// A finite group given by its Cayley table. Elements are 0..order-1.
class FiniteGroup {
 public:
  /// table[a][b] = a*b. Checks the group axioms; throws DomainError on failure.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string name = "");
  /// The group generated by permutations of {0..d-1}; element 0 is the identity
  /// and the others are numbered in order of discovery.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, std::string name = "");

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Symmetries of the n-gon, order 2n.
  static FiniteGroup dihedral(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  const std::string& name() const { return name_; }
  std::vector<std::vector<int>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Subsets of a group of order <= 32 as bitmasks.
using Subset = std::uint32_t;

inline constexpr int kMaxSubgroupOrder = 24;

std::vector<int> elements(Subset s);
int subset_size(Subset s);
inline bool contains(Subset s, int g) { return (s >> g) & 1U; }

/// The subgroup generated by a subset.
Subset generated(const FiniteGroup& g, Subset gens);
bool is_subgroup(const FiniteGroup& g, Subset s);
/// x S x^-1
Subset conjugate(const FiniteGroup& g, int x, Subset s);

/// Every subgroup of G, sorted by (order, mask), with conjugacy classes.
class SubgroupLattice {
 public:
  /// Throws CapExceeded when |G| > kMaxSubgroupOrder.
  explicit SubgroupLattice(const FiniteGroup& g);

  std::size_t size() const { return subgroups_.size(); }
  Subset subgroup(std::size_t i) const { return subgroups_.at(i); }
  int order(std::size_t i) const { return subset_size(subgroups_.at(i)); }
  /// Throws DomainError when s is not a subgroup.
  std::size_t index_of(Subset s) const;
  std::size_t whole() const { return size() - 1; }
  std::size_t trivial() const { return 0; }
  bool is_sub(std::size_t k, std::size_t h) const { return (subgroups_[k] & ~subgroups_[h]) == 0; }
  /// Index of x H x^-1.
  std::size_t conj(int x, std::size_t h) const { return conj_.at(h).at(static_cast<std::size_t>(x)); }
  std::size_t intersect(std::size_t a, std::size_t b) const { return index_of(subgroups_[a] & subgroups_[b]); }

  int conj_class(std::size_t i) const { return class_of_.at(i); }
  /// Members of each class; the first member (smallest) is the class representative.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

 private:
  std::vector<Subset> subgroups_;
  std::unordered_map<Subset, std::size_t> index_;
  std::vector<std::vector<std::size_t>> conj_;
  std::vector<int> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
};

/// One representative per double coset K g H (the smallest element), ascending.
std::vector<int> double_cosets(const FiniteGroup& g, Subset k, Subset h);
/// The double coset K g H as a set.
Subset double_coset(const FiniteGroup& g, Subset k, int x, Subset h);

/// A class function of a subgroup H, stored on all of G with zeros off H.
using Character = std::vector<Rational>;

Character permutation_character(const FiniteGroup& g, Subset h, Subset l);  // H acting on H/L
Character restrict_character(const Character& chi, Subset k);
Character induce_character(const FiniteGroup& g, const Character& chi, Subset h, Subset k);  // Ind_H^K
/// chi^x on x H x^-1: chi^x(y) = chi(x^-1 y x).
Character conjugate_character(const FiniteGroup& g, const Character& chi, int x);

/// Res^G_K Ind^G_H chi == sum over g in [K\G/H] of Ind^K_(gHg^-1 n K) Res chi^g, as class functions on K.
bool mackey_identity_check(const FiniteGroup& g, Subset h, Subset k, const Character& chi);

// {"name": "...", "table": [[...], ...]}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

}  // namespace catkit::mackey
