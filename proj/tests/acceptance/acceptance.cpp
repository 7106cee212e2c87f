// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bracket_oracle.hpp"
#include "catkit/braid.hpp"
#include "catkit/derivation_scheme.hpp"
#include "catkit/duoid.hpp"
#include "catkit/finite_category.hpp"
#include "catkit/finite_group.hpp"
#include "catkit/gl_classes.hpp"
#include "catkit/gset.hpp"
#include "catkit/hall.hpp"
#include "catkit/mackey.hpp"
#include "catkit/planar_diagram.hpp"
#include "catkit/species.hpp"
#include "catkit/stringdiag.hpp"
#include "catkit/subspace.hpp"
#include "catkit/ybrep.hpp"
#include "cauchy_oracle.hpp"
#include "orbit_oracle.hpp"
#include "random.hpp"
#include "subspace_oracle.hpp"

using namespace catkit;
using catkit::testing::Rng;
using catkit::testing::uniform;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what;
    pass = pass && ok;
  }
};

// 1. Yang-Baxter and Hecke relations of the builtin operator.
void ybe_hecke(Outcome& o) {
  const auto e = yb::builtin_jones();
  const auto& r = e.yb.matrix();
  const LaurentPoly q = LaurentPoly::q();
  o.require(yb::check_ybe(e.yb), "check_ybe");
  const auto lhs = compose(r, r);
  const auto rhs = r.scaled(q - 1) + SparseMat::identity(4).scaled(q);
  o.require(lhs == rhs, "R^2 = (q-1)R + q");
  o.require(yb::check_hecke(e.yb, {1, 1}, yb::HeckeCase::Equal), "check_hecke r=1");
  o.note << "R is 4x4, R^2 - (q-1)R - q = 0";
}

// 2. Closure invariants against the bracket and the braid state sum.
void link_oracles(Outcome& o) {
  const auto e = yb::builtin_jones();
  const LaurentPoly v = LaurentPoly::v();
  struct Case {
    const char* name;
    braid::BraidWord b;
    LaurentPoly frozen;
  };
  const std::vector<Case> cases{
      {"unknot", {1, {}}, 1},
      {"hopf", {2, {1, 1}}, -v.pow(-1) - v.pow(-5)},
      {"right trefoil", {2, {1, 1, 1}}, v.pow(-2) + v.pow(-6) - v.pow(-8)},
      {"left trefoil", {2, {-1, -1, -1}}, v.pow(2) + v.pow(6) - v.pow(8)},
      {"figure eight", {3, {1, -2, 1, -2}}, v.pow(4) - v.pow(2) + 1 - v.pow(-2) + v.pow(-4)},
  };
  for (const auto& c : cases) {
    const auto inv = yb::eyb_invariant(c.b, e);
    o.require(inv == braid::kauffman_bracket(braid::markov_closure(c.b)), std::string(c.name) + " vs bracket");
    o.require(inv == oracle::braid_closure_jones(c.b.strands, c.b.word), std::string(c.name) + " vs state sum");
    o.require(inv == c.frozen, std::string(c.name) + " vs frozen value");
  }
  o.note << cases.size() << " links";
}

// 3. Markov moves on random braids.
void markov(Outcome& o) {
  const auto e = yb::builtin_jones();
  Rng rng(20260101);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = uniform(rng, 1, 4);
    const braid::BraidWord b{n, catkit::testing::random_word(rng, n, uniform(rng, 0, 8))};
    const braid::BraidWord c{n, catkit::testing::random_word(rng, n, uniform(rng, 1, 4))};
    const auto base = yb::eyb_invariant(b, e);
    o.require(yb::eyb_invariant(braid::conjugate(b, c), e) == base, "conjugation");
    const int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    o.require(yb::eyb_invariant(braid::stabilize(b, sign), e) == base, "stabilization");
    ++checked;
  }
  o.note << checked << " braids, conjugation and stabilization";
}

// 4. String diagrams.
void string_diagrams(Outcome& o) {
  using namespace catkit::diagram;
  Rng rng(4242);
  const Diagram first{{{Wire{"B"}, Box{"c"}, Box{"d"}},
                       {Wire{"B"}, Wire{"B"}, Box{"b"}, Wire{"C"}},
                       {Box{"a"}, Wire{"B"}, Wire{"C"}}}};
  const Diagram second{{{Wire{"B"}, Box{"c"}, Wire{"D"}},
                        {Box{"a"}, Wire{"C"}, Wire{"D"}},
                        {Wire{"A"}, Wire{"C"}, Box{"d"}},
                        {Wire{"A"}, Box{"b"}, Wire{"C"}}}};
  for (int trial = 0; trial < 20; ++trial) {
    Environment env;
    std::map<std::string, std::size_t> dims;
    for (const char* k : {"A", "B", "C", "D"}) dims[k] = static_cast<std::size_t>(uniform(rng, 1, 3));
    for (const auto& [k, d] : dims) env.set_object(k, d);
    auto bind = [&](const std::string& name, std::vector<std::string> in, std::vector<std::string> out) {
      std::size_t r = 1, c = 1;
      for (const auto& x : out) r *= dims.at(x);
      for (const auto& x : in) c *= dims.at(x);
      env.set_box(name, {in, out, catkit::testing::random_sparse(rng, r, c, 0.6)});
    };
    bind("a", {"B", "B"}, {"A"});
    bind("b", {"C", "D"}, {"B"});
    bind("c", {"C"}, {"B", "C"});
    bind("d", {"D"}, {"D", "C"});
    o.require(eval_diagram(first, env) == eval_diagram(second, env), "layerings of gamma");
  }
  for (std::size_t d = 1; d <= 8; ++d) o.require(check_snake(d), "snake");
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto f = catkit::testing::random_sparse(rng, n, n);
    o.require(categorical_trace(f) == trace(f), "categorical trace");
  }
  o.note << "20 environments, dims 1-8, 50 traces";
}

// 5. Species.
species::ClassFunction random_cf(Rng& rng, int n) {
  auto f = species::ClassFunction::zero(n);
  for (const auto& l : species::partitions_of(n)) f.set(l, catkit::testing::random_rational(rng));
  return f;
}

void species_ring(Outcome& o) {
  using namespace catkit::species;
  Rng rng(555);
  int pairs = 0;
  // Every pair of basis indicators with total degree <= 5 (the product is bilinear).
  for (int n = 0; n <= 5; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(n - a)) {
          auto f = ClassFunction::zero(a);
          f.set(mu, 1);
          auto g = ClassFunction::zero(n - a);
          g.set(nu, 1);
          o.require(cauchy_product(f, g) == oracle::cauchy_by_invariant_subsets(f, g), "cauchy vs subsets");
          ++pairs;
        }
  for (int i = 0; i < 50; ++i) {
    const int a = uniform(rng, 0, 6);
    const int b = uniform(rng, 0, 6 - a);
    const auto f = random_cf(rng, a), g = random_cf(rng, b);
    o.require(sym_mul(char_map(f), char_map(g)) == char_map(cauchy_product(f, g)), "ch multiplicative");
    const auto h = random_cf(rng, a);
    o.require(char_map(f) + char_map(h) == char_map(ClassFunction::from_values(a, [&] {
                std::map<Partition, Rational> s;
                for (const auto& [k, x] : f.values()) s[k] = x + h.at(k);
                return s;
              }())),
              "ch additive");
  }
  o.require(char_map(ClassFunction::unit()) == SymFunc::constant(1), "ch unit");
  const auto bell = species_counts(plethysm(exp_series(), exp_plus_series()), 4);
  o.require(bell == std::vector<BigInt>{1, 1, 2, 5, 15}, "bell numbers");
  o.note << pairs << " basis pairs, 50 random pairs, Bell 1,1,2,5,15";
}

// 6. Hall algebra.
void hall_algebra(Outcome& o) {
  using namespace catkit::hall;
  int triples = 0;
  for (int qq : {2, 3, 4, 5}) {
    const FiniteField f(qq);
    for (int n = 0; n <= 4; ++n) {
      if (!enumeration_feasible(n, qq)) continue;
      for (int k = 0; k <= n; ++k) {
        const auto count = enumerate_subspaces(n, k, f).size();
        o.require(BigInt(static_cast<unsigned long>(count)) == gaussian_binomial_at(n, k, qq), "gaussian vs enumeration");
        o.require(count == oracle::count_subspaces(n, k, qq), "enumeration vs span oracle");
        o.require(gaussian_binomial(n, k).evaluate_q(Rational(qq)) == Rational(gaussian_binomial_at(n, k, qq)), "polynomial at q");
        ++triples;
      }
    }
  }
  // Basis indicators with total dimension <= 6, then random elements.
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      const auto x = HallElement::delta(a), y = HallElement::delta(b);
      o.require(hall_product(x, y) == hall_product(y, x), "commutative");
      for (int c = 0; a + b + c <= 6; ++c) {
        const auto z = HallElement::delta(c);
        o.require(hall_product(hall_product(x, y), z) == hall_product(x, hall_product(y, z)), "associative");
      }
    }
  Rng rng(66);
  for (int i = 0; i < 20; ++i) {
    HallElement x, y, z;
    for (int d = 0; d <= 2; ++d) {
      x.set(d, catkit::testing::random_laurent(rng));
      y.set(d, catkit::testing::random_laurent(rng));
      z.set(d, catkit::testing::random_laurent(rng));
    }
    o.require(hall_product(hall_product(x, y), z) == hall_product(x, hall_product(y, z)), "associative (random)");
    o.require(hall_product(x, y) == hall_product(y, x), "commutative (random)");
  }
  o.note << triples << " (n,k,q) triples, products up to total dim 6";
}

// 7. Green convolution.
void green(Outcome& o) {
  using namespace catkit::hall;
  int pairs = 0;
  for (int qq : {2, 3}) {
    const FiniteField f(qq);
    const auto classes = conj_classes(1, f).size();
    for (std::size_t a = 0; a < classes; ++a)
      for (std::size_t b = 0; b < classes; ++b) {
        const auto x = GLClassFunction::indicator(1, f, static_cast<int>(a));
        const auto y = GLClassFunction::indicator(1, f, static_cast<int>(b));
        o.require(green_convolution(x, y, f) == green_convolution(y, x, f), "commutativity");
        ++pairs;
      }
    const auto one = GLClassFunction::constant(1, f, 1);
    o.require(green_convolution(one, one, f, Extension::Standard) == green_convolution(one, one, f, Extension::Sheared),
              "basis independence");
  }
  const FiniteField f2(2);
  const auto one = GLClassFunction::constant(1, f2, 1);
  o.require(green_convolution(one, one, f2).values.at(conj_classes(2, f2).class_id(FqMatrix::identity(2))) == Rational(3),
            "1.1 at the identity");
  o.note << pairs << " indicator pairs over GL_2(F_2) and GL_2(F_3)";
}

// 8. Mackey functors.
std::vector<mackey::FiniteGroup> small_groups() {
  using mackey::FiniteGroup;
  std::vector<FiniteGroup> out{FiniteGroup::trivial()};
  for (int n = 2; n <= 8; ++n) out.push_back(FiniteGroup::cyclic(n));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                            FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
  out.push_back(FiniteGroup::symmetric(3));
  out.push_back(FiniteGroup::dihedral(4));
  out.push_back(FiniteGroup::quaternion());
  return out;
}

void mackey_suite(Outcome& o) {
  using namespace catkit::mackey;
  int identities = 0, functors = 0;
  const auto groups = small_groups();
  for (const auto& g : groups) {
    const SubgroupLattice lat(g);
    for (std::size_t h = 0; h < lat.size(); ++h)
      for (std::size_t l = 0; l < lat.size(); ++l) {
        if (!lat.is_sub(l, h)) continue;
        const auto chi = permutation_character(g, lat.subgroup(h), lat.subgroup(l));
        for (std::size_t k = 0; k < lat.size(); ++k) {
          o.require(mackey_identity_check(g, lat.subgroup(h), lat.subgroup(k), chi), "mackey identity in " + g.name());
          ++identities;
        }
      }
  }
  Rng rng(88);
  for (const auto& g : groups) {
    if (g.order() > 6 && g.order() != 8) continue;
    const auto gp = std::make_shared<const FiniteGroup>(g);
    const SubgroupLattice lat(g);
    for (int i = 0; i < 2; ++i) {
      auto r = GSet::cosets(gp, lat.subgroup(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(lat.size()) - 1))));
      if (i == 1) r = disjoint_union(r, GSet::regular(gp));
      const auto rep = mackey_axioms_validate(fixed_point_mackey(r));
      o.require(rep.ok() && rep.green_checked, "fixed point functor of " + g.name());
      ++functors;
    }
  }
  const std::vector<mackey::FiniteGroup> orbit_groups{FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                                                      FiniteGroup::quaternion(), FiniteGroup::cyclic(6)};
  for (int i = 0; i < 30; ++i) {
    const auto gp = std::make_shared<const FiniteGroup>(orbit_groups[static_cast<std::size_t>(i) % orbit_groups.size()]);
    const SubgroupLattice lat(*gp);
    auto random_gset = [&] {
      const int top = static_cast<int>(lat.size()) - 1;
      auto x = GSet::cosets(gp, lat.subgroup(static_cast<std::size_t>(uniform(rng, 0, top))));
      if (catkit::testing::coin(rng)) x = disjoint_union(x, GSet::cosets(gp, lat.subgroup(static_cast<std::size_t>(uniform(rng, 0, top)))));
      return x;
    };
    const auto x = random_gset(), y = random_gset();
    o.require(burnside_mul(x, y, lat) == oracle::product_orbit_types(x, y, lat), "burnside_mul vs orbits");
  }
  o.note << groups.size() << " groups, " << identities << " identities, " << functors << " functors, 30 G-set pairs";
}

// 9. Box product with the Burnside functor.
void box_unit(Outcome& o) {
  using namespace catkit::mackey;
  const auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  const auto m = fixed_point_mackey(GSet::regular(c2));
  const auto jm = box_product(burnside_mackey(c2), m);
  o.require(jm.dims == m.dims, "dims of J box M");
  o.require(mackey_axioms_validate(jm).mackey_ok(), "J box M is a Mackey functor");
  o.note << "dims";
  for (auto d : jm.dims) o.note << " " << d;
}

// 10. Derivation schemes and duoids.
void duoidal_suite(Outcome& o, const std::filesystem::path& data) {
  using namespace catkit::duoidal;
  std::vector<FiniteCategory> cats;
  for (const auto& entry : std::filesystem::directory_iterator(data / "categories")) {
    std::ifstream in(entry.path());
    auto cat = category_from_json(Json::parse(in));
    if (cat.num_objects() <= 3) cats.push_back(std::move(cat));
  }
  std::sort(cats.begin(), cats.end(), [](const auto& a, const auto& b) { return a.name() < b.name(); });
  Rng rng(1010);
  int duoids = 0;
  for (const auto& cat : cats) {
    const auto c = std::make_shared<const FiniteCategory>(cat);
    // A random scheme with 0-2 cells per parallel pair.
    DerivationScheme r(c);
    for (const auto& p : r.pairs())
      for (int i = uniform(rng, 0, 2); i > 0; --i) r.add(p, Cell::atom("r" + std::to_string(i)));
    const std::vector<DerivationScheme> schemes{terminal_scheme(c), unit_star(c), unit_circ(c), r};
    for (const auto& x : schemes) {
      o.require(is_bijection(star_left_unitor(x), ds_star(unit_star(c), x), x), "J * X -> X on " + cat.name());
      o.require(is_bijection(star_right_unitor(x), ds_star(x, unit_star(c)), x), "X * J -> X on " + cat.name());
      o.require(is_bijection(circ_left_unitor(x), ds_circ(unit_circ(c), x), x), "1 o X -> X on " + cat.name());
      o.require(is_bijection(circ_right_unitor(x), ds_circ(x, unit_circ(c)), x), "X o 1 -> X on " + cat.name());
      for (const auto& y : schemes) {
        const auto& z = schemes[static_cast<std::size_t>(uniform(rng, 0, 3))];
        o.require(is_bijection(star_associator(x, y, z), ds_star(ds_star(x, y), z), ds_star(x, ds_star(y, z))),
                  "star associator on " + cat.name());
        o.require(is_bijection(circ_associator(x, y, z), ds_circ(ds_circ(x, y), z), ds_circ(x, ds_circ(y, z))),
                  "circ associator on " + cat.name());
      }
    }
    std::vector<DuoidData> generated{terminal_duoid(c), discrete_duoid(c), cyclic_duoid(c, 2)};
    if (cat.num_morphisms() <= 3) generated.push_back(cyclic_duoid(c, 3));
    const std::size_t base = generated.size();
    for (std::size_t i = 0; i < base; ++i)
      for (auto part : {DuoidPart::MuH, DuoidPart::EtaH, DuoidPart::MuV, DuoidPart::EtaV})
        for (std::size_t n : {0, 1}) {
          try {
            generated.push_back(corrupt(generated[i], part, n));
          } catch (const DomainError&) {
            // Nothing to perturb: every pair has a single cell.
          }
        }
    for (const auto& d : generated) {
      const bool valid = duoid_validate(d).ok();
      const bool two_cat = two_category_check(d);
      o.require(valid == two_cat, "validate <=> 2-category on " + cat.name());
      ++duoids;
    }
  }
  o.note << cats.size() << " categories, " << duoids << " duoids";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path data = argc > 1 ? argv[1] : CATKIT_TEST_DATA_DIR;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"ybe-hecke", ybe_hecke},
      {"link-oracles", link_oracles},
      {"markov-invariance", markov},
      {"string-diagrams", string_diagrams},
      {"species-ring", species_ring},
      {"hall-algebra", hall_algebra},
      {"green-convolution", green},
      {"mackey", mackey_suite},
      {"box-unit", box_unit},
      {"duoidal", [&](Outcome& o) { duoidal_suite(o, data); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << " " << criteria[i].first << "  (" << o.note.str()
              << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
