#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "catkit/finite_field.hpp"
#include "catkit/rational.hpp"
#include "catkit/serialize.hpp"
#include "catkit/subspace.hpp"

namespace catkit::hall {

inline constexpr std::uint64_t kMaxGLOrder = 12000;

/// |GL_n(F_q)|
std::uint64_t gl_order(int n, int q);

/// Conjugacy classes of GL_n(F_q) by brute-force orbit enumeration. Class ids
/// are ordered by the smallest matrix code (see encode) in each class, and the
/// representative is that smallest matrix.
struct ClassTable {
  int n = 0;
  int q = 2;
  std::vector<FqMatrix> reps;
  std::vector<std::uint64_t> sizes;
  std::unordered_map<std::uint64_t, int> class_of;

  std::size_t size() const { return reps.size(); }
  /// Throws DomainError for a singular or wrongly sized matrix.
  int class_id(const FqMatrix& m) const;
};

/// Cached per (n, q). Throws CapExceeded when |GL_n(F_q)| > kMaxGLOrder.
const ClassTable& conj_classes(int n, const FiniteField& f);

/// A class function on GL_n(F_q): every class id of the table is a key.
struct GLClassFunction {
  int n = 0;
  int q = 2;
  std::map<int, Rational> values;

  static GLClassFunction zero(int n, const FiniteField& f);
  static GLClassFunction constant(int n, const FiniteField& f, const Rational& c);
  static GLClassFunction indicator(int n, const FiniteField& f, int class_id);

  friend bool operator==(const GLClassFunction&, const GLClassFunction&) = default;
};

/// How C/V is given a basis when computing sigma/V.
enum class Extension {
  Standard,  // standard vectors at the non-pivot columns of V
  Sheared,   // a triangular change of that basis shifted by a vector of V
};

/// Matrix of sigma restricted to an invariant V, in the RREF basis of V.
FqMatrix restriction_matrix(const FiniteField& f, const FqMatrix& sigma, const Subspace& v);
/// Matrix of the map induced by sigma on C/V, in the chosen basis.
FqMatrix quotient_matrix(const FiniteField& f, const FqMatrix& sigma, const Subspace& v,
                         Extension ext = Extension::Standard);

std::vector<Subspace> invariant_subspaces(const FiniteField& f, const FqMatrix& sigma, int k);

/// (f.g)(sigma) = sum over sigma-invariant V of dim deg f of f(sigma|V) g(sigma/V).
GLClassFunction green_convolution(const GLClassFunction& a, const GLClassFunction& b, const FiniteField& f,
                                  Extension ext = Extension::Standard);

// {"<class id>": "p/q", ...}
Json to_json(const GLClassFunction& g);
GLClassFunction gl_class_function_from_json(const Json& j, int n, const FiniteField& f);

}  // namespace catkit::hall
