#include "catkit/gset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "catkit/errors.hpp"

namespace catkit::mackey {

GSet GSet::from_table(GroupPtr g, const std::vector<std::vector<int>>& table) {
  if (static_cast<int>(table.size()) != g->order()) throw DomainError("action table needs one row per element");
  GSet x;
  x.group_ = std::move(g);
  x.size_ = table.empty() ? 0 : static_cast<int>(table.front().size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != x.size_) throw DomainError("ragged action table");
    for (int p : row) {
      if (p < 0 || p >= x.size_) throw DomainError("action table entry out of range");
      x.act_.push_back(p);
    }
  }
  const FiniteGroup& G = *x.group_;
  for (int p = 0; p < x.size_; ++p) {
    if (x.act(G.identity(), p) != p) throw DomainError("identity does not act trivially");
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        if (x.act(G.mul(a, b), p) != x.act(a, x.act(b, p))) throw DomainError("action is not compatible with products");
  }
  return x;
}

GSet GSet::cosets(GroupPtr g, Subset h) {
  if (!is_subgroup(*g, h)) throw DomainError("cosets: not a subgroup");
  const FiniteGroup& G = *g;
  std::vector<Subset> cos;
  std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
  for (int x = 0; x < G.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    Subset c = 0;
    for (int a : elements(h)) c |= Subset{1} << G.mul(x, a);
    for (int y : elements(c)) coset_of[y] = static_cast<int>(cos.size());
    cos.push_back(c);
  }
  // Number cosets by smallest element; the coset of the identity must come first.
  std::vector<std::size_t> order(cos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ea = contains(cos[a], G.identity()), eb = contains(cos[b], G.identity());
    if (ea != eb) return ea;
    return std::countr_zero(cos[a]) < std::countr_zero(cos[b]);
  });
  std::vector<int> rank(cos.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(G.order()), std::vector<int>(cos.size()));
  for (int a = 0; a < G.order(); ++a)
    for (std::size_t c = 0; c < cos.size(); ++c) {
      const int rep = std::countr_zero(cos[c]);
      table[a][rank[c]] = rank[coset_of[G.mul(a, rep)]];
    }
  return from_table(std::move(g), table);
}

GSet GSet::point(GroupPtr g) {
  const int n = g->order();
  return from_table(std::move(g), std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>{0}));
}

GSet GSet::empty(GroupPtr g) {
  const int n = g->order();
  return from_table(std::move(g), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
}

Subset GSet::stabilizer(int x) const {
  Subset s = 0;
  for (int g = 0; g < group_->order(); ++g)
    if (act(g, x) == x) s |= Subset{1} << g;
  return s;
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(size_), false);
  for (int x = 0; x < size_; ++x) {
    if (seen[x]) continue;
    std::set<int> orb;
    for (int g = 0; g < group_->order(); ++g) orb.insert(act(g, x));
    for (int y : orb) seen[y] = true;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

GSet product(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw DomainError("product of G-sets over different groups");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(x.group().order()));
  for (int g = 0; g < x.group().order(); ++g)
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < y.size(); ++b) table[g].push_back(x.act(g, a) * y.size() + y.act(g, b));
  return GSet::from_table(x.group_ptr(), table);
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw DomainError("union of G-sets over different groups");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(x.group().order()));
  for (int g = 0; g < x.group().order(); ++g) {
    for (int a = 0; a < x.size(); ++a) table[g].push_back(x.act(g, a));
    for (int b = 0; b < y.size(); ++b) table[g].push_back(x.size() + y.act(g, b));
  }
  return GSet::from_table(x.group_ptr(), table);
}

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.size()) return false;
  for (int p : f)
    if (p < 0 || p >= y.size()) return false;
  for (int g = 0; g < x.group().order(); ++g)
    for (int a = 0; a < x.size(); ++a)
      if (f[a] >= y.size() || y.act(g, f[a]) != f[x.act(g, a)]) return false;
  return true;
}

OrbitData orbit_data(const GSet& x) {
  OrbitData d;
  d.orbit_of.assign(static_cast<std::size_t>(x.size()), -1);
  d.transporter.assign(static_cast<std::size_t>(x.size()), -1);
  for (int p = 0; p < x.size(); ++p) {
    if (d.orbit_of[p] >= 0) continue;
    const int idx = static_cast<int>(d.base.size());
    d.base.push_back(p);
    d.stabilizer.push_back(x.stabilizer(p));
    for (int g = 0; g < x.group().order(); ++g) {
      const int y = x.act(g, p);
      if (d.orbit_of[y] < 0) {
        d.orbit_of[y] = idx;
        d.transporter[y] = g;
      }
    }
  }
  return d;
}

OrbitTypes orbit_types(const GSet& x, const SubgroupLattice& lattice) {
  OrbitTypes out;
  for (Subset s : orbit_data(x).stabilizer) ++out[lattice.conj_class(lattice.index_of(s))];
  return out;
}

OrbitTypes burnside_mul(const GSet& x, const GSet& y, const SubgroupLattice& lattice) {
  return orbit_types(product(x, y), lattice);
}

std::vector<BigInt> marks(const GSet& x, const SubgroupLattice& lattice) {
  std::vector<BigInt> out;
  for (const auto& cls : lattice.classes()) {
    const Subset h = lattice.subgroup(cls.front());
    long fixed = 0;
    for (int p = 0; p < x.size(); ++p)
      if ((x.stabilizer(p) & h) == h) ++fixed;
    out.emplace_back(fixed);
  }
  return out;
}

std::vector<std::vector<BigInt>> table_of_marks(const FiniteGroup& g, const SubgroupLattice& lattice) {
  auto gp = std::make_shared<const FiniteGroup>(g);
  const auto& classes = lattice.classes();
  std::vector<std::vector<BigInt>> t(classes.size(), std::vector<BigInt>(classes.size()));
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto m = marks(GSet::cosets(gp, lattice.subgroup(classes[j].front())), lattice);
    for (std::size_t i = 0; i < classes.size(); ++i) t[i][j] = m[i];
  }
  return t;
}

OrbitTypes decompose_marks(const FiniteGroup& g, const SubgroupLattice& lattice, const std::vector<BigInt>& m) {
  const auto t = table_of_marks(g, lattice);
  const std::size_t n = t.size();
  if (m.size() != n) throw DimensionError("decompose_marks: wrong number of marks");
  // Classes are ordered by subgroup order, so the table is upper triangular:
  // G/H_j has a fixed point under H_i only if H_i is subconjugate to H_j.
  std::vector<BigInt> a(n);
  for (std::size_t i = n; i-- > 0;) {
    BigInt rest = m[i];
    for (std::size_t j = i + 1; j < n; ++j) rest -= t[i][j] * a[j];
    if (rest % t[i][i] != 0) throw DomainError("marks are not those of a G-set");
    a[i] = rest / t[i][i];
    if (a[i] < 0) throw DomainError("marks are not those of a G-set");
  }
  OrbitTypes out;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0) out[static_cast<int>(i)] = static_cast<int>(a[i].get_si());
  return out;
}

void validate(const Span& s) {
  if (!is_equivariant(s.s, s.x, s.u)) throw DomainError("span: left leg is not an equivariant map S -> X");
  if (!is_equivariant(s.s, s.y, s.v)) throw DomainError("span: right leg is not an equivariant map S -> Y");
}

Span identity_span(const GSet& x) {
  std::vector<int> id(static_cast<std::size_t>(x.size()));
  for (int p = 0; p < x.size(); ++p) id[p] = p;
  return Span{x, x, x, id, id};
}

Span pullback_span(const GSet& a, const GSet& x, const std::vector<int>& f) {
  Span s = identity_span(a);
  s.x = x;
  s.u = f;
  validate(s);
  return s;
}

Span pushforward_span(const GSet& a, const GSet& y, const std::vector<int>& f) {
  Span s = identity_span(a);
  s.y = y;
  s.v = f;
  validate(s);
  return s;
}

Span span_compose(const Span& first, const Span& second) {
  if (!(first.y == second.x)) throw DimensionError("span_compose: middle objects differ");
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < first.s.size(); ++a)
    for (int b = 0; b < second.s.size(); ++b)
      if (first.v[a] == second.u[b]) pts.emplace_back(a, b);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int>(i));
  const FiniteGroup& G = first.x.group();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g)
    for (const auto& [a, b] : pts) table[g].push_back(index.at({first.s.act(g, a), second.s.act(g, b)}));
  Span out{first.x, GSet::from_table(first.x.group_ptr(), table), second.y, {}, {}};
  for (const auto& [a, b] : pts) {
    out.u.push_back(first.u[a]);
    out.v.push_back(second.v[b]);
  }
  return out;
}

bool span_isomorphic(const Span& a, const Span& b) {
  if (!(a.x == b.x) || !(a.y == b.y) || a.s.size() != b.s.size()) return false;
  const int n = a.s.size();
  const FiniteGroup& G = a.x.group();
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Points of a.s are assigned in order; consistency with the action is checked
  // whenever both ends of g.p -> g.phi(p) are assigned.
  std::function<bool(int)> assign = [&](int p) -> bool {
    if (p == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t] || b.u[t] != a.u[p] || b.v[t] != a.v[p]) continue;
      phi[p] = t;
      bool ok = true;
      for (int g = 0; g < G.order() && ok; ++g) {
        for (int r = 0; r <= p && ok; ++r) {
          const int ar = a.s.act(g, r);
          if (ar <= p && phi[ar] != b.s.act(g, phi[r])) ok = false;
        }
      }
      if (ok) {
        used[t] = true;
        if (assign(p + 1)) return true;
        used[t] = false;
      }
      phi[p] = -1;
    }
    return false;
  };
  return assign(0);
}

Json to_json(const GSet& x) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(x.group().order()));
  for (int g = 0; g < x.group().order(); ++g)
    for (int p = 0; p < x.size(); ++p) t[g].push_back(x.act(g, p));
  return Json{{"table", t}};
}

GSet gset_from_json(const Json& j, GroupPtr g) {
  try {
    return GSet::from_table(std::move(g), j.at("table").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("G-set: ") + e.what());
  }
}

}  // namespace catkit::mackey
