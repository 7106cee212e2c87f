#include "catkit/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "catkit/errors.hpp"

namespace catkit::mackey {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.name_ = std::move(name);
  if (g.n_ == 0) throw DomainError("a group needs at least one element");
  if (g.n_ > 32) throw CapExceeded("groups are limited to 32 elements");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.n_) throw DomainError("Cayley table is not square");
    for (int x : row) {
      if (x < 0 || x >= g.n_) throw DomainError("Cayley table entry out of range");
      g.table_.push_back(x);
    }
  }
  g.identity_ = -1;
  for (int e = 0; e < g.n_ && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < g.n_ && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw DomainError("Cayley table has no identity");
  for (int a = 0; a < g.n_; ++a)
    for (int b = 0; b < g.n_; ++b)
      for (int c = 0; c < g.n_; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw DomainError("Cayley table is not associative");
  g.inv_.assign(static_cast<std::size_t>(g.n_), -1);
  for (int a = 0; a < g.n_; ++a)
    for (int b = 0; b < g.n_; ++b)
      if (g.mul(a, b) == g.identity_) g.inv_[a] = b;
  for (int a = 0; a < g.n_; ++a)
    if (g.inv_[a] < 0 || g.mul(g.inv_[a], a) != g.identity_) throw DomainError("element without inverse");
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::string name) {
  const std::size_t d = generators.empty() ? 0 : generators.front().size();
  std::vector<int> id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& gen : generators) {
      if (gen.size() != d) throw DomainError("generators act on different sets");
      auto c = compose(gen, elems[k]);
      if (index.emplace(c, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(c));
        if (elems.size() > 32) throw CapExceeded("generated group exceeds 32 elements");
      }
    }
  }
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return from_table(table, std::move(name));
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, "C1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group of order < 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(t, "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw DomainError("dihedral group of an n-gon with n < 1");
  if (n == 1) return from_table({{0, 1}, {1, 0}}, "D1");
  if (n == 2) {
    auto g = direct_product(cyclic(2), cyclic(2));
    g.name_ = "D2";
    return g;
  }
  std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return from_permutations({rot, ref}, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw CapExceeded("symmetric groups are limited to S_1..S_4");
  if (n == 1) return trivial();
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return from_permutations({swap, cycle}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
  // Left multiplication by i and j on the eight units {1,i,j,k,-1,-i,-j,-k}.
  //                          1  i  j  k -1 -i -j -k
  const std::vector<int> li{1, 4, 3, 6, 5, 0, 7, 2};
  const std::vector<int> lj{2, 7, 4, 1, 6, 3, 0, 5};
  return from_permutations({li, lj}, "Q8");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return from_table(t, a.name() + "x" + b.name());
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int g = 0; s != 0; ++g, s >>= 1U)
    if (s & 1U) out.push_back(g);
  return out;
}

int subset_size(Subset s) { return std::popcount(s); }

Subset generated(const FiniteGroup& g, Subset gens) {
  Subset s = Subset{1} << g.identity() | gens;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : elements(s))
      for (int b : elements(s)) {
        const Subset bit = Subset{1} << g.mul(a, b);
        if (!(s & bit)) {
          s |= bit;
          grew = true;
        }
      }
  }
  return s;
}

bool is_subgroup(const FiniteGroup& g, Subset s) {
  if (!contains(s, g.identity())) return false;
  for (int a : elements(s))
    for (int b : elements(s))
      if (!contains(s, g.mul(a, g.inv(b)))) return false;
  return true;
}

Subset conjugate(const FiniteGroup& g, int x, Subset s) {
  Subset out = 0;
  for (int a : elements(s)) out |= Subset{1} << g.conj(x, a);
  return out;
}

SubgroupLattice::SubgroupLattice(const FiniteGroup& g) {
  if (g.order() > kMaxSubgroupOrder)
    throw CapExceeded("subgroup enumeration is limited to groups of order " + std::to_string(kMaxSubgroupOrder));
  std::set<Subset> found{generated(g, 0)};
  std::vector<Subset> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset h : frontier)
      for (int x = 0; x < g.order(); ++x) {
        if (contains(h, x)) continue;
        const Subset bigger = generated(g, h | Subset{1} << x);
        if (found.insert(bigger).second) next.push_back(bigger);
      }
    frontier = std::move(next);
  }
  subgroups_.assign(found.begin(), found.end());
  std::sort(subgroups_.begin(), subgroups_.end(), [](Subset a, Subset b) {
    const int sa = subset_size(a), sb = subset_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i], i);
  conj_.resize(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    for (int x = 0; x < g.order(); ++x) conj_[i].push_back(index_.at(conjugate(g, x, subgroups_[i])));
  class_of_.assign(subgroups_.size(), -1);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_[i] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::set<std::size_t> members(conj_[i].begin(), conj_[i].end());
    for (std::size_t m : members) class_of_[m] = c;
    classes_.emplace_back(members.begin(), members.end());
  }
}

std::size_t SubgroupLattice::index_of(Subset s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw DomainError("subset is not a subgroup");
  return it->second;
}

Subset double_coset(const FiniteGroup& g, Subset k, int x, Subset h) {
  Subset out = 0;
  for (int a : elements(k))
    for (int b : elements(h)) out |= Subset{1} << g.mul(g.mul(a, x), b);
  return out;
}

std::vector<int> double_cosets(const FiniteGroup& g, Subset k, Subset h) {
  if (!is_subgroup(g, k) || !is_subgroup(g, h)) throw DomainError("double_cosets: arguments must be subgroups");
  std::vector<int> reps;
  Subset covered = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (contains(covered, x)) continue;
    reps.push_back(x);
    covered |= double_coset(g, k, x, h);
  }
  return reps;
}

Character permutation_character(const FiniteGroup& g, Subset h, Subset l) {
  Character chi(static_cast<std::size_t>(g.order()));
  for (int y : elements(h)) {
    // y fixes the coset xL iff x^-1 y x lies in L.
    int fixed = 0;
    Subset seen = 0;
    for (int x : elements(h)) {
      if (contains(seen, x)) continue;
      for (int a : elements(l)) seen |= Subset{1} << g.mul(x, a);
      if (contains(l, g.mul(g.mul(g.inv(x), y), x))) ++fixed;
    }
    chi[y] = fixed;
  }
  return chi;
}

Character restrict_character(const Character& chi, Subset k) {
  Character out(chi.size());
  for (int y : elements(k)) out[y] = chi[y];
  return out;
}

Character induce_character(const FiniteGroup& g, const Character& chi, Subset h, Subset k) {
  Character out(static_cast<std::size_t>(g.order()));
  const Rational scale = Rational(1) / Rational(subset_size(h));
  for (int y : elements(k)) {
    Rational sum;
    for (int x : elements(k)) {
      const int z = g.mul(g.mul(g.inv(x), y), x);
      if (contains(h, z)) sum += chi[z];
    }
    out[y] = sum * scale;
  }
  return out;
}

Character conjugate_character(const FiniteGroup& g, const Character& chi, int x) {
  Character out(chi.size());
  for (int y = 0; y < g.order(); ++y) out[y] = chi[g.conj(g.inv(x), y)];
  return out;
}

bool mackey_identity_check(const FiniteGroup& g, Subset h, Subset k, const Character& chi) {
  const Subset all = (g.order() == 32) ? ~Subset{0} : ((Subset{1} << g.order()) - 1);
  const Character lhs = restrict_character(induce_character(g, chi, h, all), k);
  Character rhs(static_cast<std::size_t>(g.order()));
  for (int x : double_cosets(g, k, h)) {
    const Subset gh = conjugate(g, x, h);
    const Subset meet = gh & k;
    const Character part = induce_character(g, restrict_character(conjugate_character(g, chi, x), meet), meet, k);
    for (std::size_t y = 0; y < rhs.size(); ++y) rhs[y] += part[y];
  }
  return lhs == rhs;
}

Json to_json(const FiniteGroup& g) { return Json{{"name", g.name()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const Json& j) {
  try {
    return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>(), j.value("name", ""));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

}  // namespace catkit::mackey
