#include "catkit/duoid.hpp"

#include <map>

#include "catkit/errors.hpp"

namespace catkit::duoidal {

DuoidReport duoid_validate(const DuoidData& d) {
  DuoidReport rep;
  const DerivationScheme& a = d.a;
  const CatPtr& c = a.category_ptr();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    rep.failures.push_back(what);
  };
  const DerivationScheme j = unit_star(c), one = unit_circ(c);
  const DerivationScheme aa_h = ds_star(a, a), aa_v = ds_circ(a, a);
  if (!is_total(d.mu_h, aa_h, a)) fail(rep.shapes, "mu_h is not a map A * A -> A");
  if (!is_total(d.eta_h, j, a)) fail(rep.shapes, "eta_h is not a map J -> A");
  if (!is_total(d.mu_v, aa_v, a)) fail(rep.shapes, "mu_v is not a map A o A -> A");
  if (!is_total(d.eta_v, one, a)) fail(rep.shapes, "eta_v is not a map 1 -> A");
  if (!rep.shapes) return rep;
  const SchemeMap id = identity_map(a);

  if (compose(d.mu_h, star_map(d.mu_h, id, aa_h, a, a, a)) !=
      compose(compose(d.mu_h, star_map(id, d.mu_h, a, aa_h, a, a)), star_associator(a, a, a)))
    fail(rep.horizontal_assoc, "mu_h is not associative");
  if (compose(d.mu_h, star_map(d.eta_h, id, j, a, a, a)) != star_left_unitor(a))
    fail(rep.horizontal_unit, "eta_h is not a left unit for mu_h");
  if (compose(d.mu_h, star_map(id, d.eta_h, a, j, a, a)) != star_right_unitor(a))
    fail(rep.horizontal_unit, "eta_h is not a right unit for mu_h");

  if (compose(d.mu_v, circ_map(d.mu_v, id, aa_v, a, a, a)) !=
      compose(compose(d.mu_v, circ_map(id, d.mu_v, a, aa_v, a, a)), circ_associator(a, a, a)))
    fail(rep.vertical_assoc, "mu_v is not associative");
  if (compose(d.mu_v, circ_map(d.eta_v, id, one, a, a, a)) != circ_left_unitor(a))
    fail(rep.vertical_unit, "eta_v is not a left unit for mu_v");
  if (compose(d.mu_v, circ_map(id, d.eta_v, a, one, a, a)) != circ_right_unitor(a))
    fail(rep.vertical_unit, "eta_v is not a right unit for mu_v");

  // A o A is a horizontal monoid through the interchange and delta.
  const SchemeMap lhs = compose(compose(d.mu_v, circ_map(d.mu_h, d.mu_h, aa_h, aa_h, a, a)), ds_interchange(a, a, a, a));
  const SchemeMap rhs = compose(d.mu_h, star_map(d.mu_v, d.mu_v, aa_v, aa_v, a, a));
  if (lhs != rhs) fail(rep.mu_v_morphism, "mu_v does not preserve the horizontal product");
  if (compose(compose(d.mu_v, circ_map(d.eta_h, d.eta_h, j, j, a, a)), unit_delta(c)) != d.eta_h)
    fail(rep.mu_v_morphism, "mu_v does not preserve the horizontal unit");

  if (compose(d.eta_v, unit_mu(c)) != compose(d.mu_h, star_map(d.eta_v, d.eta_v, one, one, a, a)))
    fail(rep.eta_v_morphism, "eta_v does not preserve the horizontal product");
  if (compose(d.eta_v, unit_tau(c)) != d.eta_h) fail(rep.eta_v_morphism, "eta_v does not preserve the horizontal unit");
  return rep;
}

namespace {

struct Ref {
  Pair p;
  std::size_t i;
  bool operator==(const Ref&) const = default;
};

}  // namespace

bool two_category_check(const DuoidData& d) {
  const DerivationScheme& a = d.a;
  const FiniteCategory& cat = a.category();
  const CatPtr& c = a.category_ptr();
  const DerivationScheme aa_h = ds_star(a, a), aa_v = ds_circ(a, a);
  const DerivationScheme j = unit_star(c), one = unit_circ(c);
  if (!is_total(d.mu_h, aa_h, a) || !is_total(d.eta_h, j, a) || !is_total(d.mu_v, aa_v, a) || !is_total(d.eta_v, one, a))
    throw DomainError("two_category_check: structure maps are not total");

  auto cell = [&](const Ref& r) -> const Cell& { return a.cells(r.p).at(r.i); };
  auto vert = [&](const Ref& x, const Ref& y) {
    const Pair p{x.p.first, y.p.second};
    const int k = aa_v.index_of(p, Cell::circ(x.p.second, cell(x), cell(y)));
    return Ref{p, d.mu_v.at(p, static_cast<std::size_t>(k))};
  };
  auto horiz = [&](const Ref& x, const Ref& y) {
    const Pair p{cat.compose(y.p.first, x.p.first), cat.compose(y.p.second, x.p.second)};
    const int k = aa_h.index_of(p, Cell::star(x.p.first, x.p.second, y.p.first, y.p.second, cell(x), cell(y)));
    return Ref{p, d.mu_h.at(p, static_cast<std::size_t>(k))};
  };
  auto ident = [&](int f) { return Ref{{f, f}, d.eta_v.at({f, f}, 0)}; };
  auto hunit = [&](int obj) {
    const int e = cat.identity(obj);
    return Ref{{e, e}, d.eta_h.at({e, e}, 0)};
  };

  std::vector<Ref> all;
  for (const auto& [p, v] : a.raw())
    for (std::size_t i = 0; i < v.size(); ++i) all.push_back({p, i});
  std::map<std::pair<Pair, std::size_t>, int> pos;
  for (std::size_t k = 0; k < all.size(); ++k) pos[{all[k].p, all[k].i}] = static_cast<int>(k);
  auto id_of = [&](const Ref& r) { return pos.at({r.p, r.i}); };

  for (int f = 0; f < cat.num_morphisms(); ++f)
    for (int g = 0; g < cat.num_morphisms(); ++g)
      if (cat.composable(g, f) && horiz(ident(f), ident(g)) != ident(cat.compose(g, f))) return false;
  for (int obj = 0; obj < cat.num_objects(); ++obj)
    if (hunit(obj) != ident(cat.identity(obj))) return false;

  // vt[x][y] = x ; y and ht[x][y] = x * y as cell ids, -1 when not composable.
  const std::size_t n = all.size();
  std::vector<std::vector<int>> vt(n, std::vector<int>(n, -1)), ht(n, std::vector<int>(n, -1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (all[x].p.second == all[y].p.first) vt[x][y] = id_of(vert(all[x], all[y]));
      if (cat.composable(all[y].p.first, all[x].p.first)) ht[x][y] = id_of(horiz(all[x], all[y]));
    }

  for (std::size_t x = 0; x < n; ++x) {
    const Ref& r = all[x];
    if (vert(ident(r.p.first), r) != r || vert(r, ident(r.p.second)) != r) return false;
    if (horiz(hunit(cat.source(r.p.first)), r) != r || horiz(r, hunit(cat.target(r.p.first))) != r) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (const int xy = vt[x][y]; xy >= 0)
        for (std::size_t z = 0; z < n; ++z)
          if (vt[y][z] >= 0 && vt[static_cast<std::size_t>(xy)][z] != vt[x][static_cast<std::size_t>(vt[y][z])]) return false;
      if (const int xy = ht[x][y]; xy >= 0)
        for (std::size_t z = 0; z < n; ++z)
          if (ht[y][z] >= 0 && ht[static_cast<std::size_t>(xy)][z] != ht[x][static_cast<std::size_t>(ht[y][z])]) return false;
    }
  }
  // Interchange: (x ; x') * (y ; y') = (x * y) ; (x' * y').
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      const int xx = vt[x][x2];
      if (xx < 0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const int xy = ht[x][y];
        if (xy < 0) continue;
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const int yy = vt[y][y2];
          if (yy < 0) continue;
          const int lhs = ht[static_cast<std::size_t>(xx)][static_cast<std::size_t>(yy)];
          const int x2y2 = ht[x2][y2];
          if (x2y2 < 0 || lhs != vt[static_cast<std::size_t>(xy)][static_cast<std::size_t>(x2y2)]) return false;
        }
      }
    }
  return true;
}

namespace {

template <class Fn>
SchemeMap tabulate(const DerivationScheme& src, const DerivationScheme& dst, Fn fn) {
  SchemeMap out;
  for (const auto& [p, cs] : src.raw())
    for (const auto& c : cs) {
      const int k = dst.index_of(p, fn(p, c));
      if (k < 0) throw DomainError("structure map lands outside the scheme");
      out.images[p].push_back(static_cast<std::size_t>(k));
    }
  return out;
}

DuoidData constant_duoid(DerivationScheme a, const std::string& label) {
  const CatPtr c = a.category_ptr();
  auto to = [&](Pair, const Cell&) { return Cell::atom(label); };
  DuoidData d{a, {}, {}, {}, {}};
  d.mu_h = tabulate(ds_star(a, a), a, to);
  d.eta_h = tabulate(unit_star(c), a, to);
  d.mu_v = tabulate(ds_circ(a, a), a, to);
  d.eta_v = tabulate(unit_circ(c), a, to);
  return d;
}

}  // namespace

DuoidData terminal_duoid(CatPtr c) { return constant_duoid(terminal_scheme(c), "*"); }

DuoidData discrete_duoid(CatPtr c) { return constant_duoid(unit_circ(c), "1"); }

DuoidData cyclic_duoid(CatPtr c, int m) {
  if (m < 1) throw DomainError("cyclic_duoid needs m >= 1");
  DerivationScheme a(c);
  for (const auto& p : a.pairs())
    for (int k = 0; k < m; ++k) a.add(p, Cell::atom(std::to_string(k)));
  auto sum = [m](Pair, const Cell& cell) {
    return Cell::atom(std::to_string((std::stoi(cell.parts[0].label) + std::stoi(cell.parts[1].label)) % m));
  };
  auto zero = [](Pair, const Cell&) { return Cell::atom("0"); };
  DuoidData d{a, {}, {}, {}, {}};
  d.mu_h = tabulate(ds_star(a, a), a, sum);
  d.eta_h = tabulate(unit_star(c), a, zero);
  d.mu_v = tabulate(ds_circ(a, a), a, sum);
  d.eta_v = tabulate(unit_circ(c), a, zero);
  return d;
}

DuoidData corrupt(const DuoidData& d, DuoidPart part, std::size_t n) {
  DuoidData out = d;
  SchemeMap& f = part == DuoidPart::MuH ? out.mu_h : part == DuoidPart::EtaH ? out.eta_h : part == DuoidPart::MuV ? out.mu_v : out.eta_v;
  std::vector<std::pair<Pair, std::size_t>> eligible;
  for (const auto& [p, v] : f.images)
    if (d.a.cells(p).size() >= 2)
      for (std::size_t i = 0; i < v.size(); ++i) eligible.emplace_back(p, i);
  if (eligible.empty()) throw DomainError("corrupt: no pair with two or more cells in the image");
  const auto& [p, i] = eligible[n % eligible.size()];
  auto& slot = f.images[p][i];
  slot = (slot + 1) % d.a.cells(p).size();
  return out;
}

Json to_json(const DuoidReport& r) {
  return Json{{"shapes", r.shapes},
              {"horizontal_assoc", r.horizontal_assoc},
              {"horizontal_unit", r.horizontal_unit},
              {"vertical_assoc", r.vertical_assoc},
              {"vertical_unit", r.vertical_unit},
              {"mu_v_morphism", r.mu_v_morphism},
              {"eta_v_morphism", r.eta_v_morphism},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

Json to_json(const DuoidData& d) {
  const FiniteCategory& cat = d.a.category();
  for (const auto& [p, v] : d.a.raw())
    for (const auto& c : v)
      if (c.kind != Cell::Kind::Atom) throw DomainError("only atomic cells can be written out");
  auto ref = [&](Pair p, std::size_t i) {
    return Json::array({cat.morphism(p.first).name, cat.morphism(p.second).name, d.a.cells(p).at(i).label});
  };
  const DerivationScheme aa_v = ds_circ(d.a, d.a), aa_h = ds_star(d.a, d.a);
  Json vert = Json::array(), horiz = Json::array(), vu = Json::array(), hu = Json::array();
  for (const auto& [p, v] : aa_v.raw())
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Cell& c = v[i];
      const Pair px{p.first, c.morphs[0]}, py{c.morphs[0], p.second};
      vert.push_back({ref(px, static_cast<std::size_t>(d.a.index_of(px, c.parts[0]))),
                      ref(py, static_cast<std::size_t>(d.a.index_of(py, c.parts[1]))), ref(p, d.mu_v.at(p, i))});
    }
  for (const auto& [p, v] : aa_h.raw())
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Cell& c = v[i];
      const Pair px{c.morphs[0], c.morphs[1]}, py{c.morphs[2], c.morphs[3]};
      horiz.push_back({ref(px, static_cast<std::size_t>(d.a.index_of(px, c.parts[0]))),
                       ref(py, static_cast<std::size_t>(d.a.index_of(py, c.parts[1]))), ref(p, d.mu_h.at(p, i))});
    }
  for (int f = 0; f < cat.num_morphisms(); ++f) vu.push_back({cat.morphism(f).name, ref({f, f}, d.eta_v.at({f, f}, 0))});
  for (int o = 0; o < cat.num_objects(); ++o)
    hu.push_back({cat.object_name(o), ref({o, o}, d.eta_h.at({o, o}, 0))});
  Json out = to_json(d.a);
  out["category"] = to_json(cat);
  out["vertical"] = vert;
  out["horizontal"] = horiz;
  out["vertical_units"] = vu;
  out["horizontal_units"] = hu;
  return out;
}

DuoidData duoid_from_json(const Json& j) {
  try {
    const CatPtr c = std::make_shared<const FiniteCategory>(category_from_json(j.at("category")));
    const DerivationScheme a = scheme_from_json(c, j);
    auto ref = [&](const Json& r) -> std::pair<Pair, Cell> {
      if (!r.is_array() || r.size() != 3) throw ParseError("cell references are [source, target, label]");
      const Pair p{c->find_morphism(r[0].get<std::string>()), c->find_morphism(r[1].get<std::string>())};
      Cell cell = Cell::atom(r[2].get<std::string>());
      if (a.index_of(p, cell) < 0) throw ParseError("unknown cell " + r.dump());
      return {p, cell};
    };
    using Key = std::pair<std::pair<Pair, Cell>, std::pair<Pair, Cell>>;
    std::map<Key, Cell> vtab, htab;
    for (const auto& e : j.at("vertical")) vtab[{ref(e.at(0)), ref(e.at(1))}] = ref(e.at(2)).second;
    for (const auto& e : j.at("horizontal")) htab[{ref(e.at(0)), ref(e.at(1))}] = ref(e.at(2)).second;
    std::map<int, Cell> vu, hu;
    for (const auto& e : j.at("vertical_units")) vu[c->find_morphism(e.at(0).get<std::string>())] = ref(e.at(1)).second;
    for (const auto& e : j.at("horizontal_units")) hu[c->find_object(e.at(0).get<std::string>())] = ref(e.at(1)).second;

    auto look = [](const auto& tab, const auto& key, const std::string& what) {
      auto it = tab.find(key);
      if (it == tab.end()) throw ParseError("missing entry in " + what);
      return it->second;
    };
    DuoidData d{a, {}, {}, {}, {}};
    d.mu_v = tabulate(ds_circ(a, a), a, [&](Pair p, const Cell& x) {
      const Pair px{p.first, x.morphs[0]}, py{x.morphs[0], p.second};
      return look(vtab, Key{{px, x.parts[0]}, {py, x.parts[1]}}, "vertical");
    });
    d.mu_h = tabulate(ds_star(a, a), a, [&](Pair, const Cell& x) {
      const Pair px{x.morphs[0], x.morphs[1]}, py{x.morphs[2], x.morphs[3]};
      return look(htab, Key{{px, x.parts[0]}, {py, x.parts[1]}}, "horizontal");
    });
    d.eta_v = tabulate(unit_circ(c), a, [&](Pair p, const Cell&) { return look(vu, p.first, "vertical_units"); });
    d.eta_h = tabulate(unit_star(c), a, [&](Pair p, const Cell&) { return look(hu, c->source(p.first), "horizontal_units"); });
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("duoid JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("duoid JSON: ") + e.what());
  }
}

}  // namespace catkit::duoidal
