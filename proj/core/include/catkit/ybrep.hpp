#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catkit/braid.hpp"
#include "catkit/sparse_matrix.hpp"

namespace catkit::yb {

/// An operator R on V (x) V with dim V = d, stored as a d^2 x d^2 matrix.
class YBOp {
 public:
  /// Throws DimensionError unless R is square of size d^2. The inverse is
  /// computed eagerly; it is absent when det R is not a unit of Z[v, v^-1].
  static YBOp make(SparseMat r);

  std::size_t dim() const { return dim_; }
  const SparseMat& matrix() const { return r_; }
  bool invertible() const { return inverse_.has_value(); }
  /// Throws DomainError when R is not invertible.
  const SparseMat& inverse() const;

 private:
  std::size_t dim_ = 0;
  SparseMat r_;
  std::optional<SparseMat> inverse_;
};

/// The flip e_i (x) e_j -> e_j (x) e_i.
YBOp flip(std::size_t dim);

/// (R (x) 1)(1 (x) R)(R (x) 1) == (1 (x) R)(R (x) 1)(1 (x) R) on V^(x)3.
bool check_ybe(const YBOp& r);

/// Cuspidal degrees r and s; s is used only in the distinct case.
struct HeckeParams {
  int r = 1;
  int s = 1;
};

enum class HeckeCase { Distinct, Equal };

/// Distinct: R^2 = q^(rs).  Equal: R^2 = q^(r(r-1)/2) (q^r - 1) R + q^(r^2).
bool check_hecke(const YBOp& r, const HeckeParams& p, HeckeCase which);

/// Objects s with dim A_s, operators y_(s,t) : A_s (x) A_t -> A_t (x) A_s and
/// scalar tables d (symmetric) and e.
struct HeckeAlgebroid {
  std::map<int, std::size_t> dims;
  std::map<std::pair<int, int>, SparseMat> y;
  std::map<std::pair<int, int>, LaurentPoly> d;
  std::map<int, LaurentPoly> e;
};

/// y_ts y_st = d(s,t) for s != t and y_ss^2 = e(s) y_ss + d(s,s), plus the
/// symmetry of d. Throws DimensionError when some y has the wrong shape or is missing.
bool check_hecke_algebroid(const HeckeAlgebroid& h);

/// Colored Yang-Baxter equation over every triple of objects of the algebroid.
bool check_colored_ybe(const HeckeAlgebroid& h);

/// 1^(x)left (x) m (x) 1^(x)right on V^(x)(left + k + right) for an operator m on V^(x)k.
SparseMat embed(const SparseMat& m, std::size_t dim, std::size_t left, std::size_t right);

/// rho(b) on V^(x)n; letter +-i acts as R^+-1 on factors i, i+1 and the word
/// is composed in reading order (last letter first).
SparseMat braid_rep(const braid::BraidWord& b, const YBOp& r);

struct EnhancedYB {
  YBOp yb;
  SparseMat mu;  // diagonal d x d
  LaurentPoly alpha;
  LaurentPoly beta;
};

struct EnhancementReport {
  bool mu_diagonal = false;
  bool commutes = false;        // (mu (x) mu) R = R (mu (x) mu)
  bool positive_trace = false;  // Tr_2(R (mu (x) mu)) = alpha beta mu
  bool negative_trace = false;  // Tr_2(R^-1 (mu (x) mu)) = alpha^-1 beta mu
  bool units = false;           // alpha and beta invertible
  bool ok() const { return mu_diagonal && commutes && positive_trace && negative_trace && units; }
};

EnhancementReport check_enhancement(const EnhancedYB& e);

/// alpha^-w beta^-n tr(rho(b) mu^(x)n).
LaurentPoly eyb_trace(const braid::BraidWord& b, const EnhancedYB& e);

/// eyb_trace divided by its value on the one-strand unknot, so the unknot is 1.
/// Throws DomainError if the quotient is not a Laurent polynomial.
LaurentPoly eyb_invariant(const braid::BraidWord& b, const EnhancedYB& e);

/// The two-dimensional operator pinned in conventions.hpp.
EnhancedYB builtin_jones();

/// Looks up a named builtin operator ("jones"); throws DomainError otherwise.
EnhancedYB builtin_operator(const std::string& name);

}  // namespace catkit::yb
