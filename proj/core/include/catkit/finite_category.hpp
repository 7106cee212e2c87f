#pragma once

#include <string>
#include <vector>

#include "catkit/serialize.hpp"

namespace catkit::duoidal {

struct Morphism {
  std::string name;
  int source = 0;
  int target = 0;
};

/// A finite category given by its composition table.
///
/// Morphism i < num_objects() is the identity of object i (named "1_<object>").
/// compose(g, f) is g after f and needs target(f) == source(g).
class FiniteCategory {
 public:
  /// Builds and validates a category. `compose` lists [g, f, g.f] by name for
  /// every composable pair of non-identity morphisms; identities are implicit.
  static FiniteCategory make(std::string name, const std::vector<std::string>& objects,
                             const std::vector<Morphism>& morphisms,
                             const std::vector<std::vector<std::string>>& compose);

  static FiniteCategory terminal();
  static FiniteCategory discrete(int n);
  /// a -> b.
  static FiniteCategory walking_arrow();
  /// a -> b -> c with the composite.
  static FiniteCategory composable_pair();
  /// Two parallel arrows a -> b.
  static FiniteCategory parallel_pair();
  /// a <-> b, mutually inverse.
  static FiniteCategory walking_iso();
  /// One object, endomorphisms Z/m.
  static FiniteCategory cyclic_monoid(int m);
  /// One object, endomorphisms {1, e} with e e = e.
  static FiniteCategory idempotent_monoid();

  const std::string& name() const { return name_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int a) const { return objects_.at(static_cast<std::size_t>(a)); }
  const Morphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  int source(int f) const { return morphism(f).source; }
  int target(int f) const { return morphism(f).target; }
  int identity(int a) const { return a; }
  bool is_identity(int f) const { return f < num_objects(); }
  int compose(int g, int f) const;
  bool composable(int g, int f) const { return target(f) == source(g); }
  bool parallel(int f, int g) const { return source(f) == source(g) && target(f) == target(g); }
  /// Morphisms a -> b, ascending.
  std::vector<int> hom(int a, int b) const;
  int find_morphism(const std::string& name) const;
  int find_object(const std::string& name) const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> table_;  // table_[g * n + f], -1 if not composable
};

bool operator==(const FiniteCategory& a, const FiniteCategory& b);

/// Every built-in category with at most three objects.
std::vector<FiniteCategory> small_categories();

// {"name": ..., "objects": [...], "morphisms": [{"name","source","target"}],
//  "compose": [[g, f, gf], ...]}   (identities omitted)
Json to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const Json& j);

}  // namespace catkit::duoidal
