#include "catkit/mackey.hpp"

#include <algorithm>
#include <set>

#include "catkit/errors.hpp"
#include "catkit/linalg.hpp"

namespace catkit::mackey {

namespace {

std::string sub_name(const SubgroupLattice& l, std::size_t h) { return "H" + std::to_string(h) + "(order " + std::to_string(l.order(h)) + ")"; }

// Coset representatives x of H/K (left cosets xK inside H), smallest first.
std::vector<int> left_coset_reps(const FiniteGroup& g, Subset h, Subset k) {
  std::vector<int> reps;
  Subset covered = 0;
  for (int x : elements(h)) {
    if (contains(covered, x)) continue;
    reps.push_back(x);
    for (int a : elements(k)) covered |= Subset{1} << g.mul(x, a);
  }
  return reps;
}

// Representatives of the double cosets A x B inside H.
std::vector<int> double_cosets_in(const FiniteGroup& g, Subset h, Subset a, Subset b) {
  std::vector<int> reps;
  Subset covered = 0;
  for (int x : elements(h)) {
    if (contains(covered, x)) continue;
    reps.push_back(x);
    covered |= double_coset(g, a, x, b);
  }
  return reps;
}

QMatrix qid(std::size_t n) { return QMatrix::identity(n); }

}  // namespace

const QMatrix& MackeyData::t(std::size_t k, std::size_t h) const {
  auto it = transfer.find({k, h});
  if (it == transfer.end()) throw DomainError("no transfer t^" + std::to_string(h) + "_" + std::to_string(k));
  return it->second;
}

const QMatrix& MackeyData::r(std::size_t k, std::size_t h) const {
  auto it = restriction.find({k, h});
  if (it == restriction.end()) throw DomainError("no restriction r^" + std::to_string(h) + "_" + std::to_string(k));
  return it->second;
}

const QMatrix& MackeyData::c(int g, std::size_t h) const {
  auto it = conjugation.find({g, h});
  if (it == conjugation.end())
    throw DomainError("no conjugation c_(" + std::to_string(g) + "," + std::to_string(h) + ")");
  return it->second;
}

AxiomReport mackey_axioms_validate(const MackeyData& m) {
  AxiomReport rep;
  const FiniteGroup& G = *m.group;
  const SubgroupLattice& L = *m.lattice;
  const std::size_t n = L.size();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.failures.size() < 50) rep.failures.push_back(what);
  };
  auto shape = [](const QMatrix& a, std::size_t rows, std::size_t cols) { return a.rows() == rows && a.cols() == cols; };

  if (m.dims.size() != n) {
    fail(rep.shapes, "dims has " + std::to_string(m.dims.size()) + " entries for " + std::to_string(n) + " subgroups");
    return rep;
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      auto t = m.transfer.find({k, h});
      auto r = m.restriction.find({k, h});
      if (t == m.transfer.end() || !shape(t->second, m.dims[h], m.dims[k]))
        fail(rep.shapes, "transfer from " + sub_name(L, k) + " to " + sub_name(L, h) + " missing or misshapen");
      if (r == m.restriction.end() || !shape(r->second, m.dims[k], m.dims[h]))
        fail(rep.shapes, "restriction from " + sub_name(L, h) + " to " + sub_name(L, k) + " missing or misshapen");
    }
    for (int g = 0; g < G.order(); ++g) {
      auto c = m.conjugation.find({g, h});
      if (c == m.conjugation.end() || !shape(c->second, m.dims[L.conj(g, h)], m.dims[h]))
        fail(rep.shapes, "conjugation by " + std::to_string(g) + " on " + sub_name(L, h) + " missing or misshapen");
    }
  }
  if (!rep.shapes) return rep;

  // Axiom 1.
  for (std::size_t h = 0; h < n; ++h) {
    if (m.t(h, h) != qid(m.dims[h])) fail(rep.axiom1, "t^H_H != 1 for " + sub_name(L, h));
    if (m.r(h, h) != qid(m.dims[h])) fail(rep.axiom1, "r^H_H != 1 for " + sub_name(L, h));
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!L.is_sub(l, k)) continue;
        if (compose(m.t(k, h), m.t(l, k)) != m.t(l, h))
          fail(rep.axiom1, "t^H_K t^K_L != t^H_L for " + sub_name(L, l) + " <= " + sub_name(L, k) + " <= " + sub_name(L, h));
        if (compose(m.r(l, k), m.r(k, h)) != m.r(l, h))
          fail(rep.axiom1, "r^K_L r^H_K != r^H_L for " + sub_name(L, l) + " <= " + sub_name(L, k) + " <= " + sub_name(L, h));
      }
    }
  }

  // Axiom 2.
  for (std::size_t h = 0; h < n; ++h) {
    for (int x : elements(L.subgroup(h)))
      if (m.c(x, h) != qid(m.dims[h])) fail(rep.axiom2, "c_(h,H) != 1 for h = " + std::to_string(x) + " in " + sub_name(L, h));
    for (int g = 0; g < G.order(); ++g)
      for (int g2 = 0; g2 < G.order(); ++g2)
        if (compose(m.c(g2, L.conj(g, h)), m.c(g, h)) != m.c(G.mul(g2, g), h))
          fail(rep.axiom2, "c_(g',gH) c_(g,H) != c_(g'g,H) for g = " + std::to_string(g) + ", g' = " + std::to_string(g2) +
                               ", " + sub_name(L, h));
  }

  // Axiom 3.
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      for (int g = 0; g < G.order(); ++g) {
        const std::size_t gh = L.conj(g, h), gk = L.conj(g, k);
        if (compose(m.c(g, h), m.t(k, h)) != compose(m.t(gk, gh), m.c(g, k)))
          fail(rep.axiom3, "c t != t c for g = " + std::to_string(g) + ", " + sub_name(L, k) + " <= " + sub_name(L, h));
        if (compose(m.c(g, k), m.r(k, h)) != compose(m.r(gk, gh), m.c(g, h)))
          fail(rep.axiom3, "c r != r c for g = " + std::to_string(g) + ", " + sub_name(L, k) + " <= " + sub_name(L, h));
      }
    }

  // Axiom 4: r^L_K t^L_H = sum over g in [K\L/H] of t^K_(gHg^-1 n K) c_(g, H n K^g) r^H_(H n K^g).
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t h = 0; h < n; ++h) {
      if (!L.is_sub(h, l)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!L.is_sub(k, l)) continue;
        const QMatrix lhs = compose(m.r(k, l), m.t(h, l));
        QMatrix rhs(m.dims[k], m.dims[h]);
        for (int g : double_cosets_in(G, L.subgroup(l), L.subgroup(k), L.subgroup(h))) {
          const std::size_t k_g = L.conj(G.inv(g), k);  // g^-1 K g
          const std::size_t meet = L.intersect(h, k_g);  // H n K^g
          const std::size_t image = L.conj(g, meet);     // gHg^-1 n K
          rhs += compose_all(std::vector<QMatrix>{m.t(image, k), m.c(g, meet), m.r(meet, h)});
        }
        if (lhs != rhs)
          fail(rep.axiom4, "double coset formula fails for H = " + sub_name(L, h) + ", K = " + sub_name(L, k) +
                               ", L = " + sub_name(L, l));
      }
    }

  if (!m.is_green()) return rep;
  rep.green_checked = true;
  const auto& prod = *m.product;
  const auto& unit = *m.unit;
  if (prod.size() != n || unit.size() != n) {
    fail(rep.algebra, "product data does not cover every subgroup");
    return rep;
  }
  for (std::size_t h = 0; h < n; ++h) {
    const std::size_t d = m.dims[h];
    if (!shape(prod[h], d, d * d) || !shape(unit[h], d, 1)) {
      fail(rep.algebra, "product or unit misshapen on " + sub_name(L, h));
      return rep;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    const std::size_t d = m.dims[h];
    const QMatrix& p = prod[h];
    if (compose(p, kron(p, qid(d))) != compose(p, kron(qid(d), p))) fail(rep.algebra, "product not associative on " + sub_name(L, h));
    if (compose(p, kron(unit[h], qid(d))) != qid(d) || compose(p, kron(qid(d), unit[h])) != qid(d))
      fail(rep.algebra, "unit law fails on " + sub_name(L, h));
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      const QMatrix& r = m.r(k, h);
      const QMatrix& t = m.t(k, h);
      if (compose(r, prod[h]) != compose(prod[k], kron(r, r)) || compose(r, unit[h]) != unit[k])
        fail(rep.axiom5, "restriction is not an algebra map for " + sub_name(L, k) + " <= " + sub_name(L, h));
      // a . t(b) = t(r(a) . b) and t(b) . a = t(b . r(a)), a in M(H), b in M(K).
      if (compose(prod[h], kron(qid(m.dims[h]), t)) != compose_all(std::vector<QMatrix>{t, prod[k], kron(r, qid(m.dims[k]))}))
        fail(rep.axiom6, "a t(b) != t(r(a) b) for " + sub_name(L, k) + " <= " + sub_name(L, h));
      if (compose(prod[h], kron(t, qid(m.dims[h]))) != compose_all(std::vector<QMatrix>{t, prod[k], kron(qid(m.dims[k]), r)}))
        fail(rep.axiom6, "t(b) a != t(b r(a)) for " + sub_name(L, k) + " <= " + sub_name(L, h));
    }
    for (int g = 0; g < G.order(); ++g) {
      const std::size_t gh = L.conj(g, h);
      const QMatrix& c = m.c(g, h);
      if (compose(c, prod[h]) != compose(prod[gh], kron(c, c)) || compose(c, unit[h]) != unit[gh])
        fail(rep.axiom5, "conjugation by " + std::to_string(g) + " is not an algebra map on " + sub_name(L, h));
    }
  }
  return rep;
}

MackeyData fixed_point_mackey(const GSet& r) {
  MackeyData m;
  m.group = r.group_ptr();
  m.lattice = std::make_shared<const SubgroupLattice>(r.group());
  const FiniteGroup& G = *m.group;
  const SubgroupLattice& L = *m.lattice;
  const std::size_t n = L.size();
  const int size = r.size();

  // H-orbits on R, ordered by smallest point; orbit_of[h][x] is the basis index.
  std::vector<std::vector<std::vector<int>>> orbs(n);
  std::vector<std::vector<int>> orbit_of(n, std::vector<int>(static_cast<std::size_t>(size), -1));
  for (std::size_t h = 0; h < n; ++h) {
    for (int x = 0; x < size; ++x) {
      if (orbit_of[h][x] >= 0) continue;
      std::set<int> o;
      for (int a : elements(L.subgroup(h))) o.insert(r.act(a, x));
      for (int y : o) orbit_of[h][y] = static_cast<int>(orbs[h].size());
      orbs[h].emplace_back(o.begin(), o.end());
    }
    m.dims.push_back(orbs[h].size());
  }
  // Coordinates of an H-invariant vector on R in the orbit-sum basis.
  auto coords = [&](std::size_t h, const std::vector<Rational>& vec, QMatrix& out, std::size_t col) {
    for (std::size_t i = 0; i < orbs[h].size(); ++i) out.set(i, col, vec[orbs[h][i].front()]);
  };

  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      QMatrix t(m.dims[h], m.dims[k]);
      QMatrix res(m.dims[k], m.dims[h]);
      const auto reps = left_coset_reps(G, L.subgroup(h), L.subgroup(k));
      for (std::size_t j = 0; j < orbs[k].size(); ++j) {
        std::vector<Rational> vec(static_cast<std::size_t>(size));
        for (int x0 : reps)
          for (int x : orbs[k][j]) vec[r.act(x0, x)] += 1;
        coords(h, vec, t, j);
      }
      for (std::size_t i = 0; i < orbs[h].size(); ++i)
        for (int x : orbs[h][i]) res.set(orbit_of[k][x], i, 1);
      m.transfer.emplace(std::pair{k, h}, std::move(t));
      m.restriction.emplace(std::pair{k, h}, std::move(res));
    }
    for (int g = 0; g < G.order(); ++g) {
      const std::size_t gh = L.conj(g, h);
      QMatrix c(m.dims[gh], m.dims[h]);
      for (std::size_t i = 0; i < orbs[h].size(); ++i) c.set(orbit_of[gh][r.act(g, orbs[h][i].front())], i, 1);
      m.conjugation.emplace(std::pair{g, h}, std::move(c));
    }
  }
  // Pointwise product of H-invariant functions: orbit indicators are orthogonal idempotents.
  std::vector<QMatrix> prod, unit;
  for (std::size_t h = 0; h < n; ++h) {
    const std::size_t d = m.dims[h];
    QMatrix p(d, d * d);
    QMatrix u(d, 1);
    for (std::size_t i = 0; i < d; ++i) {
      p.set(i, i * d + i, 1);
      u.set(i, 0, 1);
    }
    prod.push_back(std::move(p));
    unit.push_back(std::move(u));
  }
  m.product = std::move(prod);
  m.unit = std::move(unit);
  return m;
}

MackeyData burnside_mackey(GroupPtr group) {
  MackeyData m;
  m.group = std::move(group);
  m.lattice = std::make_shared<const SubgroupLattice>(*m.group);
  const FiniteGroup& G = *m.group;
  const SubgroupLattice& L = *m.lattice;
  const std::size_t n = L.size();

  // basis[h]: lattice indices of H-class representatives of subgroups of H;
  // pos[h][l]: basis position of the H-class of l.
  std::vector<std::vector<std::size_t>> basis(n);
  std::vector<std::map<std::size_t, std::size_t>> pos(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!L.is_sub(l, h)) continue;
      std::size_t rep = l;
      for (int x : elements(L.subgroup(h))) rep = std::min(rep, L.conj(x, l));
      if (rep == l) basis[h].push_back(l);
    }
    for (std::size_t l = 0; l < n; ++l) {
      if (!L.is_sub(l, h)) continue;
      std::size_t rep = l;
      for (int x : elements(L.subgroup(h))) rep = std::min(rep, L.conj(x, l));
      pos[h][l] = static_cast<std::size_t>(std::find(basis[h].begin(), basis[h].end(), rep) - basis[h].begin());
    }
    m.dims.push_back(basis[h].size());
  }

  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      QMatrix t(m.dims[h], m.dims[k]);
      for (std::size_t j = 0; j < basis[k].size(); ++j) t.set(pos[h].at(basis[k][j]), j, 1);
      QMatrix res(m.dims[k], m.dims[h]);
      for (std::size_t i = 0; i < basis[h].size(); ++i) {
        const std::size_t l = basis[h][i];
        for (int x : double_cosets_in(G, L.subgroup(h), L.subgroup(k), L.subgroup(l))) {
          const std::size_t meet = L.intersect(k, L.conj(x, l));
          res.add_to(pos[k].at(meet), i, 1);
        }
      }
      m.transfer.emplace(std::pair{k, h}, std::move(t));
      m.restriction.emplace(std::pair{k, h}, std::move(res));
    }
    for (int g = 0; g < G.order(); ++g) {
      const std::size_t gh = L.conj(g, h);
      QMatrix c(m.dims[gh], m.dims[h]);
      for (std::size_t i = 0; i < basis[h].size(); ++i) c.set(pos[gh].at(L.conj(g, basis[h][i])), i, 1);
      m.conjugation.emplace(std::pair{g, h}, std::move(c));
    }
  }
  std::vector<QMatrix> prod, unit;
  for (std::size_t h = 0; h < n; ++h) {
    const std::size_t d = m.dims[h];
    QMatrix p(d, d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const std::size_t la = basis[h][a], lb = basis[h][b];
        for (int x : double_cosets_in(G, L.subgroup(h), L.subgroup(la), L.subgroup(lb)))
          p.add_to(pos[h].at(L.intersect(la, L.conj(x, lb))), a * d + b, 1);
      }
    QMatrix u(d, 1);
    u.set(pos[h].at(h), 0, 1);
    prod.push_back(std::move(p));
    unit.push_back(std::move(u));
  }
  m.product = std::move(prod);
  m.unit = std::move(unit);
  return m;
}

MackeyData zero_mackey(GroupPtr group) {
  MackeyData m;
  m.group = std::move(group);
  m.lattice = std::make_shared<const SubgroupLattice>(*m.group);
  const SubgroupLattice& L = *m.lattice;
  m.dims.assign(L.size(), 0);
  for (std::size_t h = 0; h < L.size(); ++h) {
    for (std::size_t k = 0; k < L.size(); ++k)
      if (L.is_sub(k, h)) {
        m.transfer.emplace(std::pair{k, h}, QMatrix(0, 0));
        m.restriction.emplace(std::pair{k, h}, QMatrix(0, 0));
      }
    for (int g = 0; g < m.group->order(); ++g) m.conjugation.emplace(std::pair{g, h}, QMatrix(0, 0));
  }
  return m;
}

namespace {

struct Blocks {
  OrbitData orbits;
  std::vector<std::size_t> stab;    // lattice index of each base stabilizer
  std::vector<std::size_t> offset;  // first coordinate of each orbit block
  std::size_t total = 0;
};

Blocks blocks_of(const MackeyData& m, const GSet& x) {
  Blocks b;
  b.orbits = orbit_data(x);
  for (Subset s : b.orbits.stabilizer) {
    const std::size_t h = m.lattice->index_of(s);
    b.stab.push_back(h);
    b.offset.push_back(b.total);
    b.total += m.dim(h);
  }
  return b;
}

void add_block(QMatrix& out, std::size_t row0, std::size_t col0, const QMatrix& block) {
  for (const auto& e : block.triplets()) out.add_to(row0 + e.row, col0 + e.col, e.value);
}

void check_map(const GSet& x, const GSet& y, const std::vector<int>& f) {
  if (!is_equivariant(x, y, f)) throw DomainError("map of G-sets is not equivariant");
}

}  // namespace

std::size_t value_dim(const MackeyData& m, const GSet& x) { return blocks_of(m, x).total; }

QMatrix pushforward(const MackeyData& m, const GSet& x, const GSet& y, const std::vector<int>& f) {
  check_map(x, y, f);
  const Blocks bx = blocks_of(m, x), by = blocks_of(m, y);
  const SubgroupLattice& L = *m.lattice;
  QMatrix out(by.total, bx.total);
  for (std::size_t i = 0; i < bx.stab.size(); ++i) {
    const int fy = f[bx.orbits.base[i]];
    const auto j = static_cast<std::size_t>(by.orbits.orbit_of[fy]);
    const int g = by.orbits.transporter[fy];  // fy = g . base_j
    const std::size_t s = L.conj(g, by.stab[j]);
    add_block(out, by.offset[j], bx.offset[i], compose(m.c(m.group->inv(g), s), m.t(bx.stab[i], s)));
  }
  return out;
}

QMatrix pullback(const MackeyData& m, const GSet& x, const GSet& y, const std::vector<int>& f) {
  check_map(x, y, f);
  const Blocks bx = blocks_of(m, x), by = blocks_of(m, y);
  const SubgroupLattice& L = *m.lattice;
  QMatrix out(bx.total, by.total);
  for (std::size_t i = 0; i < bx.stab.size(); ++i) {
    const int fy = f[bx.orbits.base[i]];
    const auto j = static_cast<std::size_t>(by.orbits.orbit_of[fy]);
    const int g = by.orbits.transporter[fy];
    const std::size_t s = L.conj(g, by.stab[j]);
    add_block(out, bx.offset[i], by.offset[j], compose(m.r(bx.stab[i], s), m.c(g, by.stab[j])));
  }
  return out;
}

QMatrix apply_span(const MackeyData& m, const Span& s) {
  validate(s);
  return compose(pushforward(m, s.s, s.y, s.v), pullback(m, s.s, s.x, s.u));
}

std::vector<int> coset_projection(const GSet& gk, const GSet& gh) {
  const FiniteGroup& G = gk.group();
  std::vector<int> f(static_cast<std::size_t>(gk.size()), -1);
  for (int x = 0; x < G.order(); ++x) f[gk.act(x, 0)] = gh.act(x, 0);
  check_map(gk, gh, f);
  return f;
}

std::vector<int> coset_conjugation(const GSet& gh, const GSet& ghg, int g) {
  const FiniteGroup& G = gh.group();
  std::vector<int> f(static_cast<std::size_t>(gh.size()), -1);
  for (int x = 0; x < G.order(); ++x) f[gh.act(x, 0)] = ghg.act(G.mul(x, G.inv(g)), 0);
  check_map(gh, ghg, f);
  return f;
}

namespace {

// f x 1_Z on X x Z, with (a, z) at a * |Z| + z.
std::vector<int> times_z(const std::vector<int>& f, int y_size, int z_size) {
  std::vector<int> out;
  (void)y_size;
  for (int a : f)
    for (int z = 0; z < z_size; ++z) out.push_back(a * z_size + z);
  return out;
}

// 1_Z x f on Z x X.
std::vector<int> z_times(int z_size, const std::vector<int>& f, int y_size) {
  std::vector<int> out;
  for (int z = 0; z < z_size; ++z)
    for (int a : f) out.push_back(z * y_size + a);
  return out;
}

std::vector<GSet> all_cosets(const MackeyData& m) {
  std::vector<GSet> out;
  for (std::size_t h = 0; h < m.lattice->size(); ++h) out.push_back(GSet::cosets(m.group, m.lattice->subgroup(h)));
  return out;
}

}  // namespace

MackeyData dress_construct(const MackeyData& m, const GSet& z) {
  if (!(z.group() == *m.group)) throw DomainError("dress_construct: G-set over another group");
  const SubgroupLattice& L = *m.lattice;
  const std::size_t n = L.size();
  const auto cos = all_cosets(m);
  std::vector<GSet> xs;
  for (const auto& c : cos) xs.push_back(product(c, z));

  MackeyData out;
  out.group = m.group;
  out.lattice = m.lattice;
  for (const auto& x : xs) out.dims.push_back(value_dim(m, x));
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      const auto f = times_z(coset_projection(cos[k], cos[h]), cos[h].size(), z.size());
      out.transfer.emplace(std::pair{k, h}, pushforward(m, xs[k], xs[h], f));
      out.restriction.emplace(std::pair{k, h}, pullback(m, xs[k], xs[h], f));
    }
    for (int g = 0; g < m.group->order(); ++g) {
      const std::size_t gh = L.conj(g, h);
      const auto f = times_z(coset_conjugation(cos[h], cos[gh], g), cos[gh].size(), z.size());
      out.conjugation.emplace(std::pair{g, h}, pushforward(m, xs[h], xs[gh], f));
    }
  }
  return out;
}

MackeyData box_product(const MackeyData& m, const MackeyData& nf) {
  if (!(*m.group == *nf.group)) throw DomainError("box_product: functors over different groups");
  if (m.group->order() > kMaxBoxGroupOrder)
    throw CapExceeded("box_product is limited to groups of order " + std::to_string(kMaxBoxGroupOrder));
  const FiniteGroup& G = *m.group;
  const SubgroupLattice& L = *m.lattice;
  const std::size_t n = L.size();
  const auto cos = all_cosets(m);

  // Generating maps between orbits: projections G/L -> G/K and conjugations G/K -> G/gKg^-1.
  struct OrbitMap {
    std::size_t from, to;
    std::vector<int> f;
  };
  std::vector<OrbitMap> gens;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (l != k && L.is_sub(l, k)) gens.push_back({l, k, coset_projection(cos[l], cos[k])});
  for (std::size_t k = 0; k < n; ++k)
    for (int g = 0; g < G.order(); ++g)
      if (!contains(L.subgroup(k), g)) gens.push_back({k, L.conj(g, k), coset_conjugation(cos[k], cos[L.conj(g, k)], g)});

  // For Z = G/H: summand K is M(Z x G/K) (x) N(G/K).
  struct Coend {
    std::vector<GSet> zy;
    std::vector<std::size_t> offset;
    std::size_t ambient = 0;
    Quotient q;
  };
  std::vector<Coend> coends(n);
  for (std::size_t h = 0; h < n; ++h) {
    Coend& ce = coends[h];
    for (std::size_t k = 0; k < n; ++k) {
      ce.zy.push_back(product(cos[h], cos[k]));
      ce.offset.push_back(ce.ambient);
      ce.ambient += value_dim(m, ce.zy[k]) * nf.dim(k);
    }
    std::vector<QMatrix> relations;
    const int zs = cos[h].size();
    for (const auto& om : gens) {
      const std::size_t y1 = om.from, y2 = om.to;
      const auto zf = z_times(zs, om.f, cos[y2].size());
      const std::size_t m1 = value_dim(m, ce.zy[y1]), m2 = value_dim(m, ce.zy[y2]);
      const std::size_t n1 = nf.dim(y1), n2 = nf.dim(y2);
      // Along f_*: (1 x f)^* a (x) b ~ a (x) N(f_*) b.
      {
        const QMatrix p = pullback(m, ce.zy[y1], ce.zy[y2], zf);
        const QMatrix nfp = pushforward(nf, cos[y1], cos[y2], om.f);
        QMatrix rel(ce.ambient, m2 * n1);
        add_block(rel, ce.offset[y1], 0, kron(p, qid(n1)));
        add_block(rel, ce.offset[y2], 0, -kron(qid(m2), nfp));
        relations.push_back(std::move(rel));
      }
      // Along f^*: (1 x f)_* a (x) b ~ a (x) N(f^*) b.
      {
        const QMatrix p = pushforward(m, ce.zy[y1], ce.zy[y2], zf);
        const QMatrix nfp = pullback(nf, cos[y1], cos[y2], om.f);
        QMatrix rel(ce.ambient, m1 * n2);
        add_block(rel, ce.offset[y2], 0, kron(p, qid(n2)));
        add_block(rel, ce.offset[y1], 0, -kron(qid(m1), nfp));
        relations.push_back(std::move(rel));
      }
    }
    ce.q = quotient_by_columns(ce.ambient, relations);
  }

  MackeyData out;
  out.group = m.group;
  out.lattice = m.lattice;
  for (const auto& ce : coends) out.dims.push_back(ce.q.dim());

  // A map z : G/A -> G/B induces sum over K of M(z x 1)_or^* (x) 1 on the coends.
  auto induced = [&](std::size_t a, std::size_t b, const std::vector<int>& z, bool push) {
    const Coend& src = push ? coends[a] : coends[b];
    const Coend& dst = push ? coends[b] : coends[a];
    QMatrix big(dst.ambient, src.ambient);
    for (std::size_t k = 0; k < n; ++k) {
      const auto zk = times_z(z, cos[b].size(), cos[k].size());
      const QMatrix mk = push ? pushforward(m, coends[a].zy[k], coends[b].zy[k], zk)
                              : pullback(m, coends[a].zy[k], coends[b].zy[k], zk);
      add_block(big, dst.offset[k], src.offset[k], kron(mk, qid(nf.dim(k))));
    }
    return compose_all(std::vector<QMatrix>{dst.q.project, big, src.q.section});
  };
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!L.is_sub(k, h)) continue;
      const auto f = coset_projection(cos[k], cos[h]);
      out.transfer.emplace(std::pair{k, h}, induced(k, h, f, true));
      out.restriction.emplace(std::pair{k, h}, induced(k, h, f, false));
    }
    for (int g = 0; g < G.order(); ++g) {
      const std::size_t gh = L.conj(g, h);
      out.conjugation.emplace(std::pair{g, h}, induced(h, gh, coset_conjugation(cos[h], cos[gh], g), true));
    }
  }
  return out;
}

Json to_json(const MackeyData& m) {
  Json subs = Json::array();
  for (std::size_t h = 0; h < m.lattice->size(); ++h) {
    subs.push_back({{"index", h},
                    {"elements", elements(m.lattice->subgroup(h))},
                    {"class", m.lattice->conj_class(h)},
                    {"dim", m.dims.at(h)}});
  }
  return Json{{"group", m.group->name()}, {"order", m.group->order()}, {"subgroups", subs}, {"green", m.is_green()}};
}

Json to_json(const AxiomReport& r) {
  Json j{{"axiom1", r.axiom1}, {"axiom2", r.axiom2}, {"axiom3", r.axiom3}, {"axiom4", r.axiom4}, {"shapes", r.shapes}};
  if (r.green_checked) {
    j["algebra"] = r.algebra;
    j["axiom5"] = r.axiom5;
    j["axiom6"] = r.axiom6;
  }
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  return j;
}

MackeyData corrupt_transfer(const MackeyData& m, std::size_t k, std::size_t h) {
  MackeyData out = m;
  auto it = out.transfer.find({k, h});
  if (it == out.transfer.end() || it->second.rows() == 0 || it->second.cols() == 0)
    throw DomainError("corrupt_transfer: no nonempty transfer to corrupt");
  it->second.add_to(0, 0, 1);
  return out;
}

}  // namespace catkit::mackey
