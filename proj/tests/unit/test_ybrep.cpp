#include "doctest.h"

#include "bracket_oracle.hpp"
#include "catkit/errors.hpp"
#include "catkit/planar_diagram.hpp"
#include "catkit/ybrep.hpp"
#include "random.hpp"

using namespace catkit;
using namespace catkit::yb;
using catkit::braid::BraidWord;
using catkit::testing::Rng;

namespace {
const LaurentPoly q = LaurentPoly::q();

SparseMat perturbed_flip(std::size_t d) {
  SparseMat m = flip(d).matrix();
  m.set(0, 1, 1);
  return m;
}
}  // namespace

TEST_SUITE("ybrep") {
  TEST_CASE("yang-baxter equation") {
    CHECK(check_ybe(YBOp::make(SparseMat::identity(4))));
    CHECK(check_ybe(flip(3)));
    CHECK_FALSE(check_ybe(YBOp::make(perturbed_flip(2))));
    CHECK(check_ybe(builtin_jones().yb));
    CHECK_THROWS_AS(YBOp::make(SparseMat::identity(3)), DimensionError);
    CHECK_THROWS_AS(YBOp::make(SparseMat::zero(4, 4)).inverse(), DomainError);
  }

  TEST_CASE("hecke relations") {
    const auto r = builtin_jones().yb;
    const auto& m = r.matrix();
    CHECK(compose(m, m) == m.scaled(q - 1) + SparseMat::identity(4).scaled(q));
    CHECK(check_hecke(r, {1, 1}, HeckeCase::Equal));
    CHECK_FALSE(check_hecke(r, {2, 1}, HeckeCase::Equal));
    CHECK(check_hecke(YBOp::make(SparseMat::identity(4)), {0, 0}, HeckeCase::Distinct));
    CHECK(check_hecke(flip(2), {0, 0}, HeckeCase::Distinct));
    CHECK_FALSE(check_hecke(flip(2), {1, 1}, HeckeCase::Distinct));
  }

  TEST_CASE("hecke algebroids") {
    HeckeAlgebroid one;
    one.dims[0] = 2;
    one.y[{0, 0}] = builtin_jones().yb.matrix();
    one.d[{0, 0}] = q;
    one.e[0] = q - 1;
    CHECK(check_hecke_algebroid(one));
    CHECK(check_colored_ybe(one));
    one.e[0] = q;
    CHECK_FALSE(check_hecke_algebroid(one));

    HeckeAlgebroid two;
    two.dims = {{0, 2}, {1, 3}};
    for (int s : {0, 1})
      for (int t : {0, 1}) {
        const std::size_t ds = two.dims[s], dt = two.dims[t];
        SparseMat sw = SparseMat::zero(dt * ds, ds * dt);
        for (std::size_t i = 0; i < ds; ++i)
          for (std::size_t j = 0; j < dt; ++j) sw.set(j * ds + i, i * dt + j, 1);
        two.y[{s, t}] = sw;
        two.d[{s, t}] = 1;
      }
    two.e = {{0, 0}, {1, 0}};
    CHECK(check_hecke_algebroid(two));
    CHECK(check_colored_ybe(two));
    two.y.erase({0, 1});
    CHECK_THROWS_AS(check_hecke_algebroid(two), DimensionError);
  }

  TEST_CASE("braid representation") {
    const auto r = builtin_jones().yb;
    CHECK(braid_rep(BraidWord{3, {}}, r) == SparseMat::identity(8));
    CHECK(braid_rep(BraidWord{3, {1, 2, 1}}, r) == braid_rep(BraidWord{3, {2, 1, 2}}, r));
    CHECK(braid_rep(BraidWord{3, {1, -1}}, r) == SparseMat::identity(8));
    CHECK(braid_rep(BraidWord{3, {2}}, r) == embed(r.matrix(), 2, 1, 0));
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
      const BraidWord a{3, catkit::testing::random_word(rng, 3, 4)};
      const BraidWord b{3, catkit::testing::random_word(rng, 3, 4)};
      CHECK(braid_rep(catkit::braid::braid_compose(a, b), r) == compose(braid_rep(a, r), braid_rep(b, r)));
    }
  }

  TEST_CASE("enhancement") {
    const auto e = builtin_jones();
    const auto rep = check_enhancement(e);
    CHECK(rep.mu_diagonal);
    CHECK(rep.commutes);
    CHECK(rep.positive_trace);
    CHECK(rep.negative_trace);
    CHECK(rep.units);
    auto bad = e;
    bad.alpha = LaurentPoly::v(3);
    CHECK_FALSE(check_enhancement(bad).ok());
    CHECK_THROWS_AS(builtin_operator("nope"), DomainError);
  }

  TEST_CASE("invariants of closures") {
    const auto e = builtin_jones();
    CHECK(eyb_invariant(BraidWord{1, {}}, e) == LaurentPoly(1));
    CHECK(eyb_trace(BraidWord{1, {}}, e) == -LaurentPoly::v() - LaurentPoly::v(-1));
    for (const BraidWord& b : {BraidWord{2, {1, 1, 1}}, BraidWord{2, {1, 1}}, BraidWord{3, {1, -2, 1, -2}},
                               BraidWord{2, {-1, -1, -1}}}) {
      CHECK(eyb_invariant(b, e) == catkit::braid::kauffman_bracket(catkit::braid::markov_closure(b)));
      CHECK(eyb_invariant(b, e) == oracle::braid_closure_jones(b.strands, b.word));
    }
  }

  TEST_CASE("markov moves") {
    const auto e = builtin_jones();
    Rng rng(33);
    for (int i = 0; i < 15; ++i) {
      const int n = catkit::testing::uniform(rng, 1, 3);
      const BraidWord b{n, catkit::testing::random_word(rng, n, catkit::testing::uniform(rng, 0, 6))};
      const BraidWord c{n, catkit::testing::random_word(rng, n, 3)};
      const auto base = eyb_invariant(b, e);
      CHECK(eyb_invariant(catkit::braid::conjugate(b, c), e) == base);
      CHECK(eyb_invariant(catkit::braid::stabilize(b, 1), e) == base);
      CHECK(eyb_invariant(catkit::braid::stabilize(b, -1), e) == base);
    }
  }
}
