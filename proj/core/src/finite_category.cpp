#include "catkit/finite_category.hpp"

#include <map>

#include "catkit/errors.hpp"

namespace catkit::duoidal {

FiniteCategory FiniteCategory::make(std::string name, const std::vector<std::string>& objects,
                                    const std::vector<Morphism>& morphisms,
                                    const std::vector<std::vector<std::string>>& compose) {
  FiniteCategory c;
  c.name_ = std::move(name);
  c.objects_ = objects;
  if (objects.empty()) throw ParseError("category " + c.name_ + " has no objects");
  std::map<std::string, int> by_name;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    Morphism id{"1_" + objects[a], static_cast<int>(a), static_cast<int>(a)};
    c.morphisms_.push_back(id);
  }
  std::map<std::string, int> obj_names;
  for (std::size_t a = 0; a < objects.size(); ++a)
    if (!obj_names.emplace(objects[a], static_cast<int>(a)).second) throw ParseError("duplicate object " + objects[a]);
  for (const auto& m : morphisms) {
    if (m.source < 0 || m.target < 0 || m.source >= c.num_objects() || m.target >= c.num_objects())
      throw ParseError("morphism " + m.name + " has an unknown endpoint");
    c.morphisms_.push_back(m);
  }
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (!by_name.emplace(c.morphism(f).name, f).second) throw ParseError("duplicate morphism name " + c.morphism(f).name);

  const int n = c.num_morphisms();
  c.table_.assign(static_cast<std::size_t>(n * n), -1);
  auto slot = [&](int g, int f) -> int& { return c.table_[static_cast<std::size_t>(g * n + f)]; };
  for (int f = 0; f < n; ++f) {
    slot(c.target(f), f) = f;
    slot(f, c.source(f)) = f;
  }
  auto lookup = [&](const std::string& s) {
    auto it = by_name.find(s);
    if (it == by_name.end()) throw ParseError("unknown morphism " + s);
    return it->second;
  };
  for (const auto& row : compose) {
    if (row.size() != 3) throw ParseError("composition entries are [g, f, g.f]");
    const int g = lookup(row[0]), f = lookup(row[1]), gf = lookup(row[2]);
    if (!c.composable(g, f)) throw ParseError(row[0] + " . " + row[1] + " is not composable");
    if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g))
      throw ParseError(row[0] + " . " + row[1] + " = " + row[2] + " has the wrong endpoints");
    if (slot(g, f) >= 0 && slot(g, f) != gf) throw ParseError(row[0] + " . " + row[1] + " is defined twice");
    slot(g, f) = gf;
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (c.composable(g, f) && slot(g, f) < 0)
        throw ParseError("composite " + c.morphism(g).name + " . " + c.morphism(f).name + " is missing");
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < n; ++f)
        if (c.composable(g, f) && slot(slot(h, g), f) != slot(h, slot(g, f)))
          throw ParseError("composition is not associative at " + c.morphism(h).name + ", " + c.morphism(g).name +
                           ", " + c.morphism(f).name);
    }
  return c;
}

int FiniteCategory::compose(int g, int f) const {
  const int n = num_morphisms();
  if (g < 0 || f < 0 || g >= n || f >= n || !composable(g, f)) throw DomainError("morphisms are not composable");
  return table_[static_cast<std::size_t>(g * n + f)];
}

std::vector<int> FiniteCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (source(f) == a && target(f) == b) out.push_back(f);
  return out;
}

int FiniteCategory::find_morphism(const std::string& name) const {
  for (int f = 0; f < num_morphisms(); ++f)
    if (morphism(f).name == name) return f;
  throw ParseError("unknown morphism " + name);
}

int FiniteCategory::find_object(const std::string& name) const {
  for (int a = 0; a < num_objects(); ++a)
    if (objects_[static_cast<std::size_t>(a)] == name) return a;
  throw ParseError("unknown object " + name);
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (int f = 0; f < a.num_morphisms(); ++f)
    if (a.source(f) != b.source(f) || a.target(f) != b.target(f)) return false;
  for (int g = 0; g < a.num_morphisms(); ++g)
    for (int f = 0; f < a.num_morphisms(); ++f)
      if (a.composable(g, f) && a.compose(g, f) != b.compose(g, f)) return false;
  return true;
}

FiniteCategory FiniteCategory::terminal() { return make("terminal", {"a"}, {}, {}); }

FiniteCategory FiniteCategory::discrete(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back(std::string(1, static_cast<char>('a' + i)));
  return make("discrete" + std::to_string(n), objs, {}, {});
}

FiniteCategory FiniteCategory::walking_arrow() { return make("walking_arrow", {"a", "b"}, {{"f", 0, 1}}, {}); }

FiniteCategory FiniteCategory::composable_pair() {
  return make("composable_pair", {"a", "b", "c"}, {{"f", 0, 1}, {"g", 1, 2}, {"gf", 0, 2}}, {{"g", "f", "gf"}});
}

FiniteCategory FiniteCategory::parallel_pair() { return make("parallel_pair", {"a", "b"}, {{"f", 0, 1}, {"g", 0, 1}}, {}); }

FiniteCategory FiniteCategory::walking_iso() {
  return make("walking_iso", {"a", "b"}, {{"f", 0, 1}, {"f'", 1, 0}}, {{"f'", "f", "1_a"}, {"f", "f'", "1_b"}});
}

FiniteCategory FiniteCategory::cyclic_monoid(int m) {
  if (m < 1) throw DomainError("cyclic_monoid needs m >= 1");
  std::vector<Morphism> ms;
  for (int k = 1; k < m; ++k) ms.push_back({"s" + std::to_string(k), 0, 0});
  auto nm = [](int k) { return k == 0 ? std::string("1_a") : "s" + std::to_string(k); };
  std::vector<std::vector<std::string>> comp;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) comp.push_back({nm(i), nm(j), nm((i + j) % m)});
  return make("cyclic" + std::to_string(m), {"a"}, ms, comp);
}

FiniteCategory FiniteCategory::idempotent_monoid() {
  return make("idempotent", {"a"}, {{"e", 0, 0}}, {{"e", "e", "e"}});
}

std::vector<FiniteCategory> small_categories() {
  return {FiniteCategory::terminal(),        FiniteCategory::discrete(2),      FiniteCategory::walking_arrow(),
          FiniteCategory::composable_pair(), FiniteCategory::parallel_pair(),  FiniteCategory::walking_iso(),
          FiniteCategory::cyclic_monoid(2),  FiniteCategory::cyclic_monoid(3), FiniteCategory::idempotent_monoid()};
}

Json to_json(const FiniteCategory& c) {
  Json objs = Json::array(), ms = Json::array(), comp = Json::array();
  for (int a = 0; a < c.num_objects(); ++a) objs.push_back(c.object_name(a));
  for (int f = c.num_objects(); f < c.num_morphisms(); ++f)
    ms.push_back({{"name", c.morphism(f).name}, {"source", c.object_name(c.source(f))}, {"target", c.object_name(c.target(f))}});
  for (int g = c.num_objects(); g < c.num_morphisms(); ++g)
    for (int f = c.num_objects(); f < c.num_morphisms(); ++f)
      if (c.composable(g, f))
        comp.push_back({c.morphism(g).name, c.morphism(f).name, c.morphism(c.compose(g, f)).name});
  return Json{{"name", c.name()}, {"objects", objs}, {"morphisms", ms}, {"compose", comp}};
}

FiniteCategory category_from_json(const Json& j) {
  try {
    const auto objs = j.at("objects").get<std::vector<std::string>>();
    std::map<std::string, int> idx;
    for (std::size_t a = 0; a < objs.size(); ++a) idx[objs[a]] = static_cast<int>(a);
    auto obj = [&](const std::string& s) {
      auto it = idx.find(s);
      if (it == idx.end()) throw ParseError("unknown object " + s);
      return it->second;
    };
    std::vector<Morphism> ms;
    if (j.contains("morphisms"))
      for (const auto& m : j.at("morphisms"))
        ms.push_back({m.at("name").get<std::string>(), obj(m.at("source").get<std::string>()), obj(m.at("target").get<std::string>())});
    std::vector<std::vector<std::string>> comp;
    if (j.contains("compose"))
      for (const auto& row : j.at("compose")) comp.push_back(row.get<std::vector<std::string>>());
    return FiniteCategory::make(j.value("name", std::string("category")), objs, ms, comp);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("category JSON: ") + e.what());
  }
}

}  // namespace catkit::duoidal
