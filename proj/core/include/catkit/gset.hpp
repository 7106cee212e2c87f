#pragma once

#include <map>
#include <vector>

#include "catkit/finite_group.hpp"

namespace catkit::mackey {

/// A finite left G-set: act(g, x) for g in G and points 0..size-1.
class GSet {
 public:
  /// table[g][x] = g.x. Checks the action axioms; throws DomainError on failure.
  static GSet from_table(GroupPtr g, const std::vector<std::vector<int>>& table);
  /// Left cosets xH, numbered by their smallest element (so H itself is point 0).
  static GSet cosets(GroupPtr g, Subset h);
  static GSet point(GroupPtr g);
  static GSet empty(GroupPtr g);
  /// The regular action of G on itself.
  static GSet regular(GroupPtr g) { return cosets(g, Subset{1} << g->identity()); }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return size_; }
  int act(int g, int x) const { return act_[static_cast<std::size_t>(g * size_ + x)]; }
  Subset stabilizer(int x) const;

  /// Orbits, each sorted, ordered by their smallest point.
  std::vector<std::vector<int>> orbits() const;

  friend bool operator==(const GSet& a, const GSet& b) {
    return *a.group_ == *b.group_ && a.size_ == b.size_ && a.act_ == b.act_;
  }

 private:
  GroupPtr group_;
  int size_ = 0;
  std::vector<int> act_;
};

/// Diagonal action on pairs; the pair (x, y) is point x * |Y| + y.
GSet product(const GSet& x, const GSet& y);
/// Points of x first, then those of y shifted by |x|.
GSet disjoint_union(const GSet& x, const GSet& y);

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<int>& f);

/// Orbit structure with a chosen base point per orbit and, for every point, an
/// element carrying the base point of its orbit to it.
struct OrbitData {
  std::vector<int> base;         // smallest point of each orbit
  std::vector<int> orbit_of;     // point -> orbit index
  std::vector<int> transporter;  // point x -> g with g.base = x
  std::vector<Subset> stabilizer;  // stabilizer of each base point
};
OrbitData orbit_data(const GSet& x);

/// Multiplicity of each orbit type, keyed by subgroup conjugacy class (see SubgroupLattice).
using OrbitTypes = std::map<int, int>;

OrbitTypes orbit_types(const GSet& x, const SubgroupLattice& lattice);

/// Orbit decomposition of X x Y.
OrbitTypes burnside_mul(const GSet& x, const GSet& y, const SubgroupLattice& lattice);

/// Marks |X^H| for one representative H per conjugacy class.
std::vector<BigInt> marks(const GSet& x, const SubgroupLattice& lattice);
/// Marks of the orbit G/H for each pair of class representatives: table[i][j] = |(G/H_j)^(H_i)|.
std::vector<std::vector<BigInt>> table_of_marks(const FiniteGroup& g, const SubgroupLattice& lattice);
/// Recovers orbit multiplicities from a vector of marks by back substitution in the table of marks.
/// Throws DomainError when the marks do not come from a G-set.
OrbitTypes decompose_marks(const FiniteGroup& g, const SubgroupLattice& lattice, const std::vector<BigInt>& m);

/// A span X <-u- S -v-> Y of G-sets.
struct Span {
  GSet x;
  GSet s;
  GSet y;
  std::vector<int> u;
  std::vector<int> v;
};

/// Throws DomainError unless u and v are equivariant maps with the right domains.
void validate(const Span& s);
Span identity_span(const GSet& x);
/// (X <-f- A -1-> A) for f : A -> X.
Span pullback_span(const GSet& a, const GSet& x, const std::vector<int>& f);
/// (A <-1- A -f-> Y) for f : A -> Y.
Span pushforward_span(const GSet& a, const GSet& y, const std::vector<int>& f);

/// The composite of first : X -> Y and then second : Y -> Z, by pullback over Y.
/// The apex is {(a, b) : first.v(a) = second.u(b)}, in lexicographic order.
/// Throws DimensionError when the middle objects differ.
Span span_compose(const Span& first, const Span& second);

/// Isomorphism of spans with equal legs' endpoints: an equivariant bijection of
/// apexes commuting with both legs, found by backtracking.
bool span_isomorphic(const Span& a, const Span& b);

// {"table": [[...], ...]} with rows indexed by group elements.
Json to_json(const GSet& x);
GSet gset_from_json(const Json& j, GroupPtr g);

}  // namespace catkit::mackey
