#include "catkit/planar_diagram.hpp"

#include <map>
#include <numeric>
#include <set>

#include "catkit/conventions.hpp"

namespace catkit::braid {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Maps arc labels to 0..k-1.
std::map<int, std::size_t> index_arcs(const PlanarDiagram& pd) {
  std::map<int, std::size_t> idx;
  for (const auto& x : pd.crossings)
    for (int a : x.arcs) idx.try_emplace(a, idx.size());
  return idx;
}

// Incoming and outgoing arcs of a crossing.
std::pair<std::array<int, 2>, std::array<int, 2>> ends(const Crossing& x) {
  const auto [a, b, c, d] = x.arcs;
  if (x.sign > 0) return {{a, d}, {c, b}};
  return {{a, b}, {c, d}};
}

}  // namespace

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings) w += x.sign;
  return w;
}

int PlanarDiagram::components() const {
  auto idx = index_arcs(*this);
  UnionFind uf(idx.size());
  for (const auto& x : crossings) {
    uf.unite(idx.at(x.arcs[0]), idx.at(x.arcs[2]));
    uf.unite(idx.at(x.arcs[1]), idx.at(x.arcs[3]));
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < idx.size(); ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size()) + free_loops;
}

void validate(const PlanarDiagram& pd) {
  if (pd.free_loops < 0) throw DomainError("negative free loop count");
  std::map<int, int> seen, in, out;
  for (const auto& x : pd.crossings) {
    if (x.sign != 1 && x.sign != -1) throw DomainError("crossing sign must be +1 or -1");
    for (int a : x.arcs) ++seen[a];
    const auto [i, o] = ends(x);
    for (int a : i) ++in[a];
    for (int a : o) ++out[a];
  }
  for (const auto& [a, n] : seen) {
    if (n != 2) throw DomainError("arc " + std::to_string(a) + " occurs " + std::to_string(n) + " times");
    // A kink X[a,a,..] enters and leaves through the same crossing; both counts are still 1.
    if (in[a] != 1 || out[a] != 1)
      throw DomainError("arc " + std::to_string(a) + " has inconsistent orientation");
  }
}

PlanarDiagram markov_closure(const BraidWord& b) {
  validate(b);
  const int n = b.strands;
  int next = 0;
  std::vector<int> bottom(n), label(n);
  for (int p = 0; p < n; ++p) bottom[p] = label[p] = next++;

  std::vector<std::array<int, 5>> raw;
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) {
    const int g = *it;
    const int p = std::abs(g) - 1;
    const int in_l = label[p], in_r = label[p + 1];
    const int out_l = next++, out_r = next++;
    if (g > 0) {
      raw.push_back({in_r, out_r, out_l, in_l, 1});
    } else {
      raw.push_back({in_l, in_r, out_r, out_l, -1});
    }
    label[p] = out_l;
    label[p + 1] = out_r;
  }

  UnionFind uf(static_cast<std::size_t>(next));
  for (int p = 0; p < n; ++p) uf.unite(label[p], bottom[p]);

  PlanarDiagram pd;
  std::map<std::size_t, int> rename;
  for (const auto& r : raw) {
    Crossing x;
    for (int k = 0; k < 4; ++k) {
      auto [it, fresh] = rename.try_emplace(uf.find(r[k]), static_cast<int>(rename.size()) + 1);
      x.arcs[k] = it->second;
    }
    x.sign = r[4];
    pd.crossings.push_back(x);
  }
  std::set<std::size_t> loops;
  for (int p = 0; p < n; ++p)
    if (!rename.count(uf.find(bottom[p]))) loops.insert(uf.find(bottom[p]));
  pd.free_loops = static_cast<int>(loops.size());
  return pd;
}

LaurentPoly kauffman_bracket_in_a(const PlanarDiagram& pd) {
  const std::size_t c = pd.crossings.size();
  if (c > conventions::kMaxBracketCrossings)
    throw CapExceeded("kauffman_bracket: " + std::to_string(c) + " crossings exceeds the cap of " +
                      std::to_string(conventions::kMaxBracketCrossings));
  const auto idx = index_arcs(pd);
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);

  // Powers of d up to the largest possible loop count.
  const std::size_t max_loops = idx.size() + static_cast<std::size_t>(pd.free_loops) + 1;
  std::vector<LaurentPoly> d_pow{LaurentPoly(1)};
  for (std::size_t k = 1; k <= max_loops; ++k) d_pow.push_back(d_pow.back() * d);

  // Accumulate coefficients by (A exponent, loops) before multiplying out.
  std::map<std::pair<int, std::size_t>, long> tally;
  for (std::size_t state = 0; state < (std::size_t{1} << c); ++state) {
    UnionFind uf(idx.size());
    int a_exp = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const auto& arcs = pd.crossings[k].arcs;
      const auto at = [&](int i) { return idx.at(arcs[i]); };
      if ((state >> k) & 1U) {
        uf.unite(at(0), at(3));
        uf.unite(at(1), at(2));
        --a_exp;
      } else {
        uf.unite(at(0), at(1));
        uf.unite(at(2), at(3));
        ++a_exp;
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < idx.size(); ++i) roots.insert(uf.find(i));
    ++tally[{a_exp, roots.size() + static_cast<std::size_t>(pd.free_loops)}];
  }
  LaurentPoly sum;
  for (const auto& [key, count] : tally) {
    const auto [a_exp, loops] = key;
    if (loops == 0) continue;  // only the empty diagram, handled below
    sum += LaurentPoly::monomial(count, a_exp) * d_pow[loops - 1];
  }
  if (c == 0 && pd.free_loops == 0) return LaurentPoly(1);
  return sum;
}

LaurentPoly kauffman_bracket(const PlanarDiagram& pd) {
  const LaurentPoly bracket = kauffman_bracket_in_a(pd);
  const int w = pd.writhe();
  // (-A^3)^-w
  const LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return (factor * bracket).compress_exponents(2);
}

Json to_json(const PlanarDiagram& pd) {
  Json xs = Json::array();
  for (const auto& x : pd.crossings) xs.push_back({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3], x.sign});
  return Json{{"crossings", xs}, {"free_loops", pd.free_loops}};
}

PlanarDiagram diagram_from_json(const Json& j) {
  PlanarDiagram pd;
  try {
    for (const auto& x : j.at("crossings")) {
      const auto v = x.get<std::vector<int>>();
      if (v.size() != 5) throw ParseError("crossing must be [a,b,c,d,sign]");
      pd.crossings.push_back({{v[0], v[1], v[2], v[3]}, v[4]});
    }
    pd.free_loops = j.value("free_loops", 0);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("planar diagram: ") + e.what());
  }
  validate(pd);
  return pd;
}

}  // namespace catkit::braid
