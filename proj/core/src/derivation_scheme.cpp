#include "catkit/derivation_scheme.hpp"

#include <algorithm>

#include "catkit/errors.hpp"

namespace catkit::duoidal {

Cell Cell::star(int beta, int beta2, int gamma, int gamma2, Cell x, Cell y) {
  return Cell{Kind::Star, "", {beta, beta2, gamma, gamma2}, {std::move(x), std::move(y)}};
}

Cell Cell::circ(int middle, Cell x, Cell y) { return Cell{Kind::Circ, "", {middle}, {std::move(x), std::move(y)}}; }

std::strong_ordering Cell::operator<=>(const Cell& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = label.compare(o.label) <=> 0; c != 0) return c;
  if (auto c = morphs <=> o.morphs; c != 0) return c;
  return std::lexicographical_compare_three_way(parts.begin(), parts.end(), o.parts.begin(), o.parts.end());
}

std::string cell_string(const Cell& c, const FiniteCategory& cat) {
  auto nm = [&](int f) { return cat.morphism(f).name; };
  switch (c.kind) {
    case Cell::Kind::Atom:
      return c.label;
    case Cell::Kind::Star:
      return "(" + cell_string(c.parts[0], cat) + " *[" + nm(c.morphs[0]) + "," + nm(c.morphs[1]) + "|" + nm(c.morphs[2]) +
             "," + nm(c.morphs[3]) + "] " + cell_string(c.parts[1], cat) + ")";
    case Cell::Kind::Circ:
      return "(" + cell_string(c.parts[0], cat) + " ;[" + nm(c.morphs[0]) + "] " + cell_string(c.parts[1], cat) + ")";
  }
  return "";
}

void DerivationScheme::add(Pair p, Cell c) {
  if (p.first < 0 || p.second < 0 || p.first >= cat_->num_morphisms() || p.second >= cat_->num_morphisms() ||
      !cat_->parallel(p.first, p.second))
    throw DomainError("cells may only sit on parallel pairs");
  auto& v = cells_[p];
  auto it = std::lower_bound(v.begin(), v.end(), c);
  if (it == v.end() || !(*it == c)) v.insert(it, std::move(c));
}

DerivationScheme DerivationScheme::from_lists(std::shared_ptr<const FiniteCategory> cat,
                                              std::map<Pair, std::vector<Cell>> lists) {
  DerivationScheme s(std::move(cat));
  for (auto& [p, v] : lists) {
    if (!s.cat_->parallel(p.first, p.second)) throw DomainError("cells may only sit on parallel pairs");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  s.cells_ = std::move(lists);
  return s;
}

const std::vector<Cell>& DerivationScheme::cells(Pair p) const {
  static const std::vector<Cell> kEmpty;
  auto it = cells_.find(p);
  return it == cells_.end() ? kEmpty : it->second;
}

int DerivationScheme::index_of(Pair p, const Cell& c) const {
  const auto& v = cells(p);
  auto it = std::lower_bound(v.begin(), v.end(), c);
  if (it == v.end() || !(*it == c)) return -1;
  return static_cast<int>(it - v.begin());
}

std::vector<Pair> DerivationScheme::pairs() const {
  std::vector<Pair> out;
  for (int f = 0; f < cat_->num_morphisms(); ++f)
    for (int g = 0; g < cat_->num_morphisms(); ++g)
      if (cat_->parallel(f, g)) out.emplace_back(f, g);
  return out;
}

std::size_t DerivationScheme::total() const {
  std::size_t n = 0;
  for (const auto& [p, v] : cells_) n += v.size();
  return n;
}

void DerivationScheme::validate() const {
  for (const auto& [p, v] : cells_) {
    if (!cat_->parallel(p.first, p.second)) throw DomainError("cells on a non-parallel pair");
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i - 1] < v[i])) throw DomainError("cell list not sorted and distinct");
  }
}

bool operator==(const DerivationScheme& a, const DerivationScheme& b) {
  if (!(a.category() == b.category())) return false;
  for (const auto& p : a.pairs())
    if (a.cells(p) != b.cells(p)) return false;
  return true;
}

namespace {

const std::vector<std::size_t>& images_at(const SchemeMap& f, Pair p) {
  static const std::vector<std::size_t> kEmpty;
  auto it = f.images.find(p);
  return it == f.images.end() ? kEmpty : it->second;
}

template <class Fn>
SchemeMap map_by(const DerivationScheme& src, const DerivationScheme& dst, Fn fn) {
  SchemeMap out;
  for (const auto& [p, cs] : src.raw()) {
    auto& im = out.images[p];
    for (const auto& c : cs) {
      const Cell d = fn(p, c);
      const int k = dst.index_of(p, d);
      if (k < 0) throw DomainError("image " + cell_string(d, dst.category()) + " is not a cell of the target");
      im.push_back(static_cast<std::size_t>(k));
    }
  }
  return out;
}

void same_base(const DerivationScheme& x, const DerivationScheme& y) {
  if (!(x.category() == y.category())) throw DomainError("derivation schemes over different categories");
}

}  // namespace

bool operator==(const SchemeMap& a, const SchemeMap& b) {
  for (const auto& [p, v] : a.images)
    if (images_at(b, p) != v) return false;
  for (const auto& [p, v] : b.images)
    if (images_at(a, p) != v) return false;
  return true;
}

bool is_total(const SchemeMap& f, const DerivationScheme& x, const DerivationScheme& y) {
  for (const auto& p : x.pairs()) {
    const auto& im = images_at(f, p);
    if (im.size() != x.cells(p).size()) return false;
    for (std::size_t i : im)
      if (i >= y.cells(p).size()) return false;
  }
  for (const auto& [p, v] : f.images)
    if (!x.category().parallel(p.first, p.second) || v.size() != x.cells(p).size()) return false;
  return true;
}

bool is_bijection(const SchemeMap& f, const DerivationScheme& x, const DerivationScheme& y) {
  if (!is_total(f, x, y)) return false;
  for (const auto& p : x.pairs()) {
    if (x.cells(p).size() != y.cells(p).size()) return false;
    std::vector<bool> hit(y.cells(p).size(), false);
    for (std::size_t i : images_at(f, p)) {
      if (hit[i]) return false;
      hit[i] = true;
    }
  }
  return true;
}

SchemeMap compose(const SchemeMap& g, const SchemeMap& f) {
  SchemeMap out;
  for (const auto& [p, v] : f.images) {
    auto& im = out.images[p];
    for (std::size_t i : v) im.push_back(g.at(p, i));
  }
  return out;
}

SchemeMap identity_map(const DerivationScheme& x) {
  SchemeMap out;
  for (const auto& [p, v] : x.raw())
    for (std::size_t i = 0; i < v.size(); ++i) out.images[p].push_back(i);
  return out;
}

DerivationScheme unit_star(CatPtr c) {
  DerivationScheme s(c);
  for (int a = 0; a < c->num_objects(); ++a) s.add({c->identity(a), c->identity(a)}, Cell::atom("j"));
  return s;
}

DerivationScheme unit_circ(CatPtr c) {
  DerivationScheme s(c);
  for (int f = 0; f < c->num_morphisms(); ++f) s.add({f, f}, Cell::atom("1"));
  return s;
}

DerivationScheme terminal_scheme(CatPtr c) {
  DerivationScheme s(c);
  for (const auto& p : s.pairs()) s.add(p, Cell::atom("*"));
  return s;
}

DerivationScheme ds_star(const DerivationScheme& x, const DerivationScheme& y) {
  same_base(x, y);
  const FiniteCategory& cat = x.category();
  std::map<Pair, std::vector<Cell>> out;
  for (const auto& [px, cx] : x.raw())
    for (const auto& [py, cy] : y.raw()) {
      if (!cat.composable(py.first, px.first)) continue;
      auto& v = out[{cat.compose(py.first, px.first), cat.compose(py.second, px.second)}];
      for (const auto& a : cx)
        for (const auto& b : cy) v.push_back(Cell::star(px.first, px.second, py.first, py.second, a, b));
    }
  return DerivationScheme::from_lists(x.category_ptr(), std::move(out));
}

DerivationScheme ds_circ(const DerivationScheme& x, const DerivationScheme& y) {
  same_base(x, y);
  std::map<Pair, std::vector<Cell>> out;
  for (const auto& [px, cx] : x.raw())
    for (const auto& [py, cy] : y.raw()) {
      if (px.second != py.first) continue;
      auto& v = out[{px.first, py.second}];
      for (const auto& a : cx)
        for (const auto& b : cy) v.push_back(Cell::circ(px.second, a, b));
    }
  return DerivationScheme::from_lists(x.category_ptr(), std::move(out));
}

SchemeMap star_map(const SchemeMap& f, const SchemeMap& g, const DerivationScheme& x, const DerivationScheme& y,
                   const DerivationScheme& x2, const DerivationScheme& y2) {
  const DerivationScheme src = ds_star(x, y), dst = ds_star(x2, y2);
  return map_by(src, dst, [&](Pair, const Cell& c) {
    const Pair px{c.morphs[0], c.morphs[1]}, py{c.morphs[2], c.morphs[3]};
    const Cell& a = x2.cells(px).at(f.at(px, static_cast<std::size_t>(x.index_of(px, c.parts[0]))));
    const Cell& b = y2.cells(py).at(g.at(py, static_cast<std::size_t>(y.index_of(py, c.parts[1]))));
    return Cell::star(c.morphs[0], c.morphs[1], c.morphs[2], c.morphs[3], a, b);
  });
}

SchemeMap circ_map(const SchemeMap& f, const SchemeMap& g, const DerivationScheme& x, const DerivationScheme& y,
                   const DerivationScheme& x2, const DerivationScheme& y2) {
  const DerivationScheme src = ds_circ(x, y), dst = ds_circ(x2, y2);
  return map_by(src, dst, [&](Pair p, const Cell& c) {
    const Pair px{p.first, c.morphs[0]}, py{c.morphs[0], p.second};
    const Cell& a = x2.cells(px).at(f.at(px, static_cast<std::size_t>(x.index_of(px, c.parts[0]))));
    const Cell& b = y2.cells(py).at(g.at(py, static_cast<std::size_t>(y.index_of(py, c.parts[1]))));
    return Cell::circ(c.morphs[0], a, b);
  });
}

SchemeMap star_associator(const DerivationScheme& x, const DerivationScheme& y, const DerivationScheme& z) {
  const FiniteCategory& cat = x.category();
  const DerivationScheme src = ds_star(ds_star(x, y), z), dst = ds_star(x, ds_star(y, z));
  return map_by(src, dst, [&](Pair, const Cell& c) {
    const Cell& u = c.parts[0];
    const int b1 = u.morphs[0], b1p = u.morphs[1], b2 = u.morphs[2], b2p = u.morphs[3];
    const int g = c.morphs[2], gp = c.morphs[3];
    return Cell::star(b1, b1p, cat.compose(g, b2), cat.compose(gp, b2p), u.parts[0],
                      Cell::star(b2, b2p, g, gp, u.parts[1], c.parts[1]));
  });
}

SchemeMap circ_associator(const DerivationScheme& x, const DerivationScheme& y, const DerivationScheme& z) {
  const DerivationScheme src = ds_circ(ds_circ(x, y), z), dst = ds_circ(x, ds_circ(y, z));
  return map_by(src, dst, [&](Pair, const Cell& c) {
    const Cell& u = c.parts[0];
    return Cell::circ(u.morphs[0], u.parts[0], Cell::circ(c.morphs[0], u.parts[1], c.parts[1]));
  });
}

SchemeMap star_left_unitor(const DerivationScheme& x) {
  return map_by(ds_star(unit_star(x.category_ptr()), x), x, [](Pair, const Cell& c) { return c.parts[1]; });
}

SchemeMap star_right_unitor(const DerivationScheme& x) {
  return map_by(ds_star(x, unit_star(x.category_ptr())), x, [](Pair, const Cell& c) { return c.parts[0]; });
}

SchemeMap circ_left_unitor(const DerivationScheme& x) {
  return map_by(ds_circ(unit_circ(x.category_ptr()), x), x, [](Pair, const Cell& c) { return c.parts[1]; });
}

SchemeMap circ_right_unitor(const DerivationScheme& x) {
  return map_by(ds_circ(x, unit_circ(x.category_ptr())), x, [](Pair, const Cell& c) { return c.parts[0]; });
}

SchemeMap ds_interchange(const DerivationScheme& a, const DerivationScheme& b, const DerivationScheme& c,
                         const DerivationScheme& d) {
  const FiniteCategory& cat = a.category();
  const DerivationScheme src = ds_star(ds_circ(a, b), ds_circ(c, d));
  const DerivationScheme dst = ds_circ(ds_star(a, c), ds_star(b, d));
  return map_by(src, dst, [&](Pair, const Cell& cell) {
    const int beta = cell.morphs[0], beta2 = cell.morphs[1], gamma = cell.morphs[2], gamma2 = cell.morphs[3];
    const Cell& left = cell.parts[0];   // x : beta => beta', x' : beta' => beta''
    const Cell& right = cell.parts[1];  // y : gamma => gamma', y' : gamma' => gamma''
    const int beta_mid = left.morphs[0], gamma_mid = right.morphs[0];
    return Cell::circ(cat.compose(gamma_mid, beta_mid),
                      Cell::star(beta, beta_mid, gamma, gamma_mid, left.parts[0], right.parts[0]),
                      Cell::star(beta_mid, beta2, gamma_mid, gamma2, left.parts[1], right.parts[1]));
  });
}

SchemeMap unit_mu(CatPtr c) {
  const DerivationScheme one = unit_circ(c);
  return map_by(ds_star(one, one), one, [](Pair, const Cell&) { return Cell::atom("1"); });
}

SchemeMap unit_tau(CatPtr c) {
  return map_by(unit_star(c), unit_circ(c), [](Pair, const Cell&) { return Cell::atom("1"); });
}

SchemeMap unit_delta(CatPtr c) {
  const DerivationScheme j = unit_star(c);
  return map_by(j, ds_circ(j, j), [](Pair p, const Cell& cell) { return Cell::circ(p.first, cell, cell); });
}

Json to_json(const DerivationScheme& x) {
  const FiniteCategory& cat = x.category();
  Json cells = Json::array();
  for (const auto& [p, v] : x.raw()) {
    if (v.empty()) continue;
    Json labels = Json::array();
    for (const auto& c : v) labels.push_back(cell_string(c, cat));
    cells.push_back({{"source", cat.morphism(p.first).name}, {"target", cat.morphism(p.second).name}, {"labels", labels}});
  }
  return Json{{"cells", cells}};
}

DerivationScheme scheme_from_json(CatPtr c, const Json& j) {
  DerivationScheme s(c);
  try {
    for (const auto& e : j.at("cells")) {
      const Pair p{c->find_morphism(e.at("source").get<std::string>()), c->find_morphism(e.at("target").get<std::string>())};
      if (!c->parallel(p.first, p.second)) throw ParseError("cells on a non-parallel pair");
      for (const auto& l : e.at("labels")) s.add(p, Cell::atom(l.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scheme JSON: ") + e.what());
  }
  return s;
}

}  // namespace catkit::duoidal
