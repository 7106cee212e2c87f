#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "catkit/derivation_scheme.hpp"
#include "catkit/duoid.hpp"
#include "catkit/errors.hpp"
#include "catkit/finite_category.hpp"

using namespace catkit;
using namespace catkit::duoidal;

namespace {
CatPtr share(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

Json read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

// A scheme with `count` labelled cells at (f, f) and nothing else.
DerivationScheme cells_at(const CatPtr& c, int f, int count) {
  DerivationScheme x(c);
  for (int i = 0; i < count; ++i) x.add({f, f}, Cell::atom("x" + std::to_string(i)));
  return x;
}
}  // namespace

TEST_SUITE("duoidal_ds") {
  TEST_CASE("finite categories") {
    const auto arrow = FiniteCategory::walking_arrow();
    CHECK(arrow.num_objects() == 2);
    CHECK(arrow.num_morphisms() == 3);
    const int f = arrow.find_morphism("f");
    CHECK(arrow.compose(f, arrow.identity(0)) == f);
    CHECK(arrow.compose(arrow.identity(1), f) == f);
    CHECK_THROWS_AS(arrow.compose(f, f), DomainError);
    CHECK(FiniteCategory::composable_pair().hom(0, 2).size() == 1);
    const auto c3 = FiniteCategory::cyclic_monoid(3);
    const int s = c3.find_morphism("s1");
    CHECK(c3.compose(s, c3.compose(s, s)) == c3.identity(0));
    CHECK_THROWS_AS(FiniteCategory::make("bad", {"a"}, {{"e", 0, 0}}, {}), ParseError);
    for (const auto& cat : small_categories()) CHECK(category_from_json(to_json(cat)) == cat);
  }

  TEST_CASE("category corpus") {
    int loaded = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CATKIT_TEST_DATA_DIR "/categories")) {
      const auto cat = category_from_json(read_file(entry.path()));
      CHECK(cat.num_objects() <= 3);
      ++loaded;
    }
    CHECK(loaded >= 10);
  }

  TEST_CASE("products of schemes on the walking arrow") {
    const auto c = share(FiniteCategory::walking_arrow());
    const int f = c->find_morphism("f");
    const auto t = terminal_scheme(c);
    CHECK(ds_star(t, t).cells({f, f}).size() == 2);
    const auto two = cells_at(c, f, 2);
    CHECK(ds_circ(two, two).cells({f, f}).size() == 4);
    const auto j = unit_star(c);
    const auto one = unit_circ(c);
    CHECK(ds_star(j, j).total() == j.total());
    CHECK(ds_circ(one, one).total() == one.total());
    CHECK(is_bijection(star_right_unitor(two), ds_star(two, j), two));
    CHECK(is_bijection(star_left_unitor(two), ds_star(j, two), two));
    CHECK(is_bijection(circ_right_unitor(two), ds_circ(two, one), two));
    CHECK(is_bijection(circ_left_unitor(two), ds_circ(one, two), two));
    CHECK_THROWS_AS(DerivationScheme(c).add({f, c->identity(0)}, Cell::atom("x")), DomainError);
    CHECK(scheme_from_json(c, to_json(two)) == two);
  }

  TEST_CASE("associators and unitors on every builtin category") {
    for (const auto& cat : small_categories()) {
      CAPTURE(cat.name());
      const auto c = share(cat);
      const auto t = terminal_scheme(c), j = unit_star(c), o = unit_circ(c);
      CHECK(is_bijection(star_associator(t, j, t), ds_star(ds_star(t, j), t), ds_star(t, ds_star(j, t))));
      CHECK(is_bijection(circ_associator(t, o, t), ds_circ(ds_circ(t, o), t), ds_circ(t, ds_circ(o, t))));
      CHECK(is_bijection(star_left_unitor(t), ds_star(j, t), t));
      CHECK(is_bijection(circ_right_unitor(t), ds_circ(t, o), t));
    }
  }

  TEST_CASE("interchange at unit inputs") {
    for (const auto& cat : small_categories()) {
      const auto c = share(cat);
      const auto j = unit_star(c), o = unit_circ(c);
      CHECK(is_total(unit_mu(c), ds_star(o, o), o));
      CHECK(is_total(unit_tau(c), j, o));
      CHECK(is_total(unit_delta(c), j, ds_circ(j, j)));
      const auto g = ds_interchange(j, j, j, j);
      CHECK(is_total(g, ds_star(ds_circ(j, j), ds_circ(j, j)), ds_circ(ds_star(j, j), ds_star(j, j))));
    }
    // Singleton schemes on the walking arrow: the interchange is a bijection.
    const auto c = share(FiniteCategory::walking_arrow());
    const auto j = unit_star(c);
    const auto g = ds_interchange(j, j, j, j);
    CHECK(is_bijection(g, ds_star(ds_circ(j, j), ds_circ(j, j)), ds_circ(ds_star(j, j), ds_star(j, j))));
    CHECK(ds_star(ds_circ(j, j), ds_circ(j, j)).total() == 2);
  }

  TEST_CASE("unit structure maps are coherent") {
    for (const auto& cat : small_categories()) {
      CAPTURE(cat.name());
      const auto c = share(cat);
      const auto j = unit_star(c), o = unit_circ(c);
      const auto oo = ds_star(o, o);
      const auto id_o = identity_map(o), id_j = identity_map(j);
      const auto mu = unit_mu(c), tau = unit_tau(c), delta = unit_delta(c);
      // mu (mu * 1) = mu (1 * mu) a.
      const auto left = compose(mu, star_map(mu, id_o, oo, o, o, o));
      const auto right = compose(mu, compose(star_map(id_o, mu, o, oo, o, o), star_associator(o, o, o)));
      CHECK(left == right);
      // tau is a unit for mu.
      CHECK(compose(mu, star_map(tau, id_o, j, o, o, o)) == star_left_unitor(o));
      CHECK(compose(mu, star_map(id_o, tau, o, j, o, o)) == star_right_unitor(o));
      // a (delta o 1) delta = (1 o delta) delta.
      const auto jj = ds_circ(j, j);
      const auto twice_left = compose(circ_associator(j, j, j), compose(circ_map(delta, id_j, j, j, jj, j), delta));
      const auto twice_right = compose(circ_map(id_j, delta, j, j, j, jj), delta);
      CHECK(twice_left == twice_right);
    }
  }

  TEST_CASE("duoids and two-categories") {
    for (const auto& cat : small_categories()) {
      CAPTURE(cat.name());
      const auto c = share(cat);
      const auto term = terminal_duoid(c);
      CHECK(duoid_validate(term).ok());
      CHECK(two_category_check(term));
      const auto disc = discrete_duoid(c);
      CHECK(duoid_validate(disc).ok());
      CHECK(two_category_check(disc));
    }
    const auto c2 = share(FiniteCategory::cyclic_monoid(2));
    const auto d = cyclic_duoid(c2, 2);
    CHECK(duoid_validate(d).ok());
    CHECK(two_category_check(d));
    for (auto part : {DuoidPart::MuH, DuoidPart::MuV}) {
      const auto bad = corrupt(d, part, 1);
      CHECK_FALSE(duoid_validate(bad).ok());
      CHECK_FALSE(two_category_check(bad));
    }
    const auto bad_v = corrupt(d, DuoidPart::MuV, 0);
    const auto rep_v = duoid_validate(bad_v);
    CHECK_FALSE((rep_v.vertical_assoc && rep_v.vertical_unit));
    CHECK_THROWS_AS(corrupt(terminal_duoid(c2), DuoidPart::MuH), DomainError);
  }

  TEST_CASE("duoid json") {
    const auto d = duoid_from_json(read_file(CATKIT_TEST_DATA_DIR "/duoid_cyclic2.json"));
    CHECK(duoid_validate(d).ok());
    const auto back = duoid_from_json(to_json(d));
    CHECK(back.mu_h == d.mu_h);
    CHECK(back.mu_v == d.mu_v);
    CHECK(back.eta_h == d.eta_h);
    CHECK(back.eta_v == d.eta_v);
    CHECK_THROWS_AS(duoid_from_json(Json::parse(R"({"category": {}})")), ParseError);
  }
}
