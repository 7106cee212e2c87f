#pragma once

#include <vector>

#include "catkit/finite_field.hpp"
#include "catkit/laurent.hpp"

namespace catkit::hall {

/// A subspace of F_q^n, stored by its reduced row echelon basis (rows).
class Subspace {
 public:
  /// Span of the given rows (any spanning set).
  static Subspace span(const FiniteField& f, const FqMatrix& rows);
  static Subspace zero(int n);
  static Subspace whole(int n);

  int ambient() const { return basis_.cols; }
  int dim() const { return basis_.rows; }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<int> non_pivots() const;

  bool contains(const FiniteField& f, const std::vector<int>& x) const;
  /// sigma V = V for a square matrix sigma acting on column vectors.
  bool invariant_under(const FiniteField& f, const FqMatrix& sigma) const;
  /// Coordinates of x in F_q^n / V with respect to the standard vectors at the non-pivot columns.
  std::vector<int> quotient_coords(const FiniteField& f, const std::vector<int>& x) const;
  /// Coordinates of x in V with respect to the basis rows; throws DomainError if x is not in V.
  std::vector<int> coords(const FiniteField& f, const std::vector<int>& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

 private:
  FqMatrix basis_;
  std::vector<int> pivots_;
};

/// Size cap for enumeration: n <= 4 with q <= 3, or n <= 3 with any supported q.
bool enumeration_feasible(int n, int q);

/// All k-dimensional subspaces of F_q^n, each once, sorted by RREF basis.
/// Throws CapExceeded outside enumeration_feasible.
std::vector<Subspace> enumerate_subspaces(int n, int k, const FiniteField& f);

/// [n choose k]_q as a polynomial in q = v^2. Throws DomainError unless 0 <= k <= n.
LaurentPoly gaussian_binomial(int n, int k);
BigInt gaussian_binomial_at(int n, int k, int q);

/// An ordered pair with U (+) V = F_q^n, and the canonical isomorphisms
/// r : U -> C/V and s : C/U -> V as matrices. C/V uses the non-pivot basis of
/// V and C/U the non-pivot basis of U; U and V use their RREF bases.
struct DirectSumPair {
  Subspace u;
  Subspace v;
  FqMatrix r;
  FqMatrix s;
};

/// All ordered pairs (U, V) with U (+) V = F_q^n; only dim U = k when k >= 0.
std::vector<DirectSumPair> direct_sum_pairs(int n, const FiniteField& f, int k = -1);

/// True when U and V meet in 0 and their dimensions add to the ambient dimension.
bool is_direct_sum(const FiniteField& f, const Subspace& u, const Subspace& v);

}  // namespace catkit::hall
