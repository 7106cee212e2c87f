#include "doctest.h"

#include "bracket_oracle.hpp"
#include "catkit/braid.hpp"
#include "catkit/errors.hpp"
#include "catkit/planar_diagram.hpp"
#include "random.hpp"

using namespace catkit;
using namespace catkit::braid;
using catkit::testing::Rng;

namespace {
const LaurentPoly v = LaurentPoly::v();

struct Known {
  const char* name;
  BraidWord braid;
  LaurentPoly jones;
};

// Jones polynomials in v (q = v^2 = t^-1).
std::vector<Known> known_links() {
  return {
      {"unknot", {1, {}}, 1},
      {"unknot, two strands", {2, {1}}, 1},
      {"two-component unlink", {2, {}}, -v - v.pow(-1)},
      {"three-component unlink", {3, {}}, v.pow(2) + 2 + v.pow(-2)},
      {"hopf", {2, {1, 1}}, -v.pow(-1) - v.pow(-5)},
      {"negative hopf", {2, {-1, -1}}, -v - v.pow(5)},
      {"right trefoil", {2, {1, 1, 1}}, v.pow(-2) + v.pow(-6) - v.pow(-8)},
      {"left trefoil", {2, {-1, -1, -1}}, v.pow(2) + v.pow(6) - v.pow(8)},
      {"figure eight", {3, {1, -2, 1, -2}}, v.pow(4) - v.pow(2) + 1 - v.pow(-2) + v.pow(-4)},
      {"cinquefoil", {2, {1, 1, 1, 1, 1}}, v.pow(-4) + v.pow(-8) - v.pow(-10) + v.pow(-12) - v.pow(-14)},
  };
}
}  // namespace

TEST_SUITE("braidknot") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(validate(BraidWord{3, {1, -2}}));
    CHECK_THROWS_AS(validate(BraidWord{2, {2}}), DomainError);
    CHECK_THROWS_AS(validate(BraidWord{2, {0}}), DomainError);
    CHECK_THROWS_AS(validate(BraidWord{0, {}}), DomainError);
  }

  TEST_CASE("composition, tensor and inverse") {
    CHECK(braid_compose(BraidWord{2, {1}}, BraidWord{2, {-1}}).word.empty());
    CHECK(braid_compose(BraidWord{3, {1, 2}}, BraidWord{3, {}}).word == std::vector<int>{1, 2});
    CHECK_THROWS_AS(braid_compose(BraidWord{2, {}}, BraidWord{3, {}}), DimensionError);
    CHECK(braid_tensor(BraidWord{1, {}}, BraidWord{1, {}}) == BraidWord{2, {}});
    CHECK(braid_tensor(BraidWord{2, {1}}, BraidWord{2, {1}}) == BraidWord{4, {1, 3}});
    CHECK(braid_inverse(BraidWord{3, {1, -2, 2}}).word == std::vector<int>{-2, 2, -1});
    CHECK(braid_compose(BraidWord{3, {1, -2}}, braid_inverse(BraidWord{3, {1, -2}})).word.empty());
    CHECK(free_reduce({1, 2, -2, -1, 3}) == std::vector<int>{3});
  }

  TEST_CASE("braiding gamma") {
    CHECK(braiding_gamma(1, 1) == BraidWord{2, {1}});
    CHECK(braiding_gamma(2, 0).word.empty());
    CHECK(braiding_gamma(0, 3).word.empty());
    CHECK(underlying_perm(braiding_gamma(2, 1)).images == std::vector<int>{2, 3, 1});
    CHECK(underlying_perm(braiding_gamma(2, 3)).is_bijection());
    CHECK(writhe(braiding_gamma(2, 3)) == 6);
  }

  TEST_CASE("underlying permutations and writhe") {
    CHECK(underlying_perm(BraidWord{3, {}}) == Permutation::identity(3));
    CHECK(underlying_perm(BraidWord{2, {1}}) == Permutation::transposition(2, 1, 2));
    CHECK(underlying_perm(BraidWord{3, {1, 2, 1}}) == underlying_perm(BraidWord{3, {2, 1, 2}}));
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
      const BraidWord a{4, catkit::testing::random_word(rng, 4, 5)};
      const BraidWord b{4, catkit::testing::random_word(rng, 4, 5)};
      CHECK(underlying_perm(braid_compose(a, b)) == underlying_perm(a) * underlying_perm(b));
      CHECK(writhe(braid_compose(a, b)) == writhe(a) + writhe(b));
    }
    CHECK(writhe(BraidWord{2, {}}) == 0);
    CHECK(writhe(BraidWord{2, {1, 1, 1}}) == 3);
    CHECK(writhe(BraidWord{3, {1, -2, 1, -2}}) == 0);
  }

  TEST_CASE("conjugation and stabilization") {
    CHECK(conjugate(BraidWord{3, {1}}, BraidWord{3, {2}}).word == std::vector<int>{2, 1, -2});
    CHECK(stabilize(BraidWord{2, {1}}, 1) == BraidWord{3, {1, 2}});
    CHECK(stabilize(BraidWord{2, {1}}, -1) == BraidWord{3, {1, -2}});
  }

  TEST_CASE("markov closure") {
    const auto unknot = markov_closure(BraidWord{1, {}});
    CHECK(unknot.size() == 0);
    CHECK(unknot.components() == 1);
    const auto trefoil = markov_closure(BraidWord{2, {1, 1, 1}});
    CHECK(trefoil.size() == 3);
    CHECK(trefoil.components() == 1);
    CHECK(trefoil.writhe() == 3);
    const auto hopf = markov_closure(BraidWord{2, {1, 1}});
    CHECK(hopf.size() == 2);
    CHECK(hopf.components() == 2);
    CHECK(markov_closure(BraidWord{3, {1}}).components() == 2);
    CHECK_NOTHROW(validate(markov_closure(BraidWord{3, {1, -2, 1, -2}})));
  }

  TEST_CASE("bracket on known links") {
    for (const auto& k : known_links()) {
      CAPTURE(k.name);
      CHECK(kauffman_bracket(markov_closure(k.braid)) == k.jones);
      CHECK(oracle::braid_closure_jones(k.braid.strands, k.braid.word) == k.jones);
    }
    CHECK(kauffman_bracket_in_a(markov_closure(BraidWord{2, {1, 1}})) ==
          LaurentPoly::monomial(-1, 4) - LaurentPoly::v(-4));
  }

  TEST_CASE("bracket matches the braid state sum on random braids") {
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
      const int n = catkit::testing::uniform(rng, 1, 4);
      const BraidWord b{n, catkit::testing::random_word(rng, n, catkit::testing::uniform(rng, 0, 8))};
      CHECK(kauffman_bracket(markov_closure(b)) == oracle::braid_closure_jones(b.strands, b.word));
    }
  }

  TEST_CASE("planar diagram json") {
    const auto pd = markov_closure(BraidWord{3, {1, -2, 1, -2}});
    const auto back = diagram_from_json(to_json(pd));
    CHECK(back.crossings == pd.crossings);
    CHECK(back.free_loops == pd.free_loops);
    CHECK_THROWS_AS(validate(PlanarDiagram{{Crossing{{1, 2, 3, 4}, 1}}, 0}), DomainError);
    CHECK(braid_from_json(to_json(BraidWord{3, {2, -1}})) == BraidWord{3, {2, -1}});
    CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"strands": 2, "word": [3]})")), DomainError);
  }

  TEST_CASE("bracket size cap") {
    std::vector<int> w(17, 1);
    CHECK_THROWS_AS(kauffman_bracket(markov_closure(BraidWord{2, w})), CapExceeded);
  }
}
