#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catkit/gset.hpp"
#include "catkit/sparse_matrix.hpp"

namespace catkit::mackey {

/// A Mackey functor for G over Q in subgroup form. Values and structure maps are
/// stored for every subgroup (not only one per conjugacy class), indexed as in
/// the SubgroupLattice:
///   transfer[{K, H}]    t^H_K : M(K) -> M(H)       for K <= H
///   restriction[{K, H}] r^H_K : M(H) -> M(K)       for K <= H
///   conjugation[{g, H}] c_(g,H) : M(H) -> M(gHg^-1)
/// A Green functor also carries, per subgroup, a product M(H) (x) M(H) -> M(H)
/// (a dim x dim^2 matrix, Kronecker order) and a unit (a dim x 1 matrix).
struct MackeyData {
  GroupPtr group;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<std::size_t> dims;
  std::map<std::pair<std::size_t, std::size_t>, QMatrix> transfer;
  std::map<std::pair<std::size_t, std::size_t>, QMatrix> restriction;
  std::map<std::pair<int, std::size_t>, QMatrix> conjugation;
  std::optional<std::vector<QMatrix>> product;
  std::optional<std::vector<QMatrix>> unit;

  const QMatrix& t(std::size_t k, std::size_t h) const;
  const QMatrix& r(std::size_t k, std::size_t h) const;
  const QMatrix& c(int g, std::size_t h) const;
  std::size_t dim(std::size_t h) const { return dims.at(h); }
  bool is_green() const { return product.has_value() && unit.has_value(); }
};

struct AxiomReport {
  bool axiom1 = true;  // transitivity (and t^H_H = r^H_H = 1)
  bool axiom2 = true;  // conjugation is a functor, trivial on H
  bool axiom3 = true;  // conjugation commutes with t and r
  bool axiom4 = true;  // double coset formula
  bool algebra = true;  // each M(H) is an associative unital algebra
  bool axiom5 = true;  // r and c are algebra maps
  bool axiom6 = true;  // Frobenius reciprocity, both sides
  bool shapes = true;  // every map present with the right shape
  bool green_checked = false;
  std::vector<std::string> failures;

  bool mackey_ok() const { return shapes && axiom1 && axiom2 && axiom3 && axiom4; }
  bool ok() const { return mackey_ok() && (!green_checked || (algebra && axiom5 && axiom6)); }
};

/// Checks axioms 1-4 as exact matrix identities; also the Green axioms when
/// product data is present. Never throws on bad data: failures are listed.
AxiomReport mackey_axioms_validate(const MackeyData& m);

/// M_R(H) = the H-fixed vectors of the permutation representation Q[R], with
/// basis the H-orbit sums ordered by smallest point. t is the relative trace,
/// r the inclusion and c translation. Carries the pointwise Green structure.
MackeyData fixed_point_mackey(const GSet& r);

/// The Burnside functor J: J(H) has basis the H-conjugacy classes of subgroups
/// L <= H (standing for H/L), ordered by the lattice index of the class
/// representative. Carries the Green structure of the Burnside ring.
MackeyData burnside_mackey(GroupPtr g);

MackeyData zero_mackey(GroupPtr g);

/// M extended to any G-set X: M(X) = sum over the orbits of X of M(stabilizer of
/// the base point), in orbit order.
std::size_t value_dim(const MackeyData& m, const GSet& x);
/// f_* : M(X) -> M(Y) for an equivariant f.
QMatrix pushforward(const MackeyData& m, const GSet& x, const GSet& y, const std::vector<int>& f);
/// f^* : M(Y) -> M(X) for an equivariant f : X -> Y.
QMatrix pullback(const MackeyData& m, const GSet& x, const GSet& y, const std::vector<int>& f);
/// M[X <-u- S -v-> Y] = v_* u^*.
QMatrix apply_span(const MackeyData& m, const Span& s);

/// The projection G/K -> G/H, xK -> xH, for K <= H (lattice indices).
std::vector<int> coset_projection(const GSet& gk, const GSet& gh);
/// The isomorphism G/H -> G/(gHg^-1), xH -> x g^-1 (gHg^-1).
std::vector<int> coset_conjugation(const GSet& gh, const GSet& ghg, int g);

/// M_Z(H) = M(G/H x Z) with structure maps induced by - x Z.
MackeyData dress_construct(const MackeyData& m, const GSet& z);

inline constexpr int kMaxBoxGroupOrder = 6;

/// (M * N)(G/H) = coend over orbits Y of M(G/H x Y) (x) N(Y), computed as a
/// quotient of the direct sum over all orbits G/K by the relations coming from
/// projections and conjugations between orbits, in both directions. Structure
/// maps are induced from those of M. Throws CapExceeded when |G| > 6.
MackeyData box_product(const MackeyData& m, const MackeyData& n);

/// Human-readable and JSON summaries.
Json to_json(const MackeyData& m);
Json to_json(const AxiomReport& r);

/// Copy of m with one entry of t^H_K changed (for negative tests).
MackeyData corrupt_transfer(const MackeyData& m, std::size_t k, std::size_t h);

}  // namespace catkit::mackey
