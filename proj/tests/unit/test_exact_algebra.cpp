#include "doctest.h"

#include "catkit/errors.hpp"
#include "catkit/laurent.hpp"
#include "catkit/linalg.hpp"
#include "catkit/rational.hpp"
#include "catkit/serialize.hpp"
#include "catkit/sparse_matrix.hpp"
#include "random.hpp"

using namespace catkit;
using catkit::testing::Rng;

namespace {
const LaurentPoly v = LaurentPoly::v();
}

TEST_SUITE("exact_algebra") {
  TEST_CASE("laurent arithmetic") {
    CHECK((v + 1) * (v - 1) == v * v - 1);
    const LaurentPoly a = LaurentPoly::monomial(3, -2) + v.pow(5);
    CHECK(a * 1 == a);
    CHECK(v.pow(3) + v == v * (v.pow(2) + 1));
    CHECK((a - a).is_zero());
    CHECK(-a + a == LaurentPoly());
    CHECK(LaurentPoly::q(2) == v.pow(4));
  }

  TEST_CASE("laurent units and inverses") {
    CHECK(LaurentPoly::monomial(-1, 4).is_unit());
    CHECK_FALSE((v + 1).is_unit());
    CHECK_FALSE(LaurentPoly::monomial(2, 1).is_unit());
    CHECK(LaurentPoly::monomial(-1, 4).inverse() == LaurentPoly::monomial(-1, -4));
    CHECK_THROWS_AS((v + 1).inverse(), DomainError);
    CHECK(v.pow(-3) == LaurentPoly::v(-3));
    CHECK_THROWS_AS((v + 1).pow(-1), DomainError);
  }

  TEST_CASE("laurent substitution, evaluation and printing") {
    const LaurentPoly p = v.pow(4) - v.pow(2) + 1;
    CHECK(p.substitute_power(-1) == v.pow(-4) - v.pow(-2) + 1);
    CHECK(p.compress_exponents(2) == v.pow(2) - v + 1);
    CHECK_THROWS_AS((v + 1).compress_exponents(2), DomainError);
    CHECK(p.evaluate(Rational(2)) == Rational(13));
    CHECK(p.evaluate_q(Rational(3)) == Rational(7));
    CHECK(LaurentPoly().str() == "0");
    CHECK((LaurentPoly::monomial(-1, 4) + LaurentPoly::monomial(2, 1) - 1 + v.pow(-3)).str() == "-v^4 + 2v - 1 + v^-3");
    CHECK((LaurentPoly::q(1) + 1).str_in_q() == "q + 1");
  }

  TEST_CASE("exact division") {
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
      const auto a = catkit::testing::random_laurent(rng);
      auto b = catkit::testing::random_laurent(rng);
      if (b.is_zero()) b = v + 2;
      const auto q = divide_exact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    CHECK_FALSE(divide_exact(v + 2, v + 1).has_value());
  }

  TEST_CASE("rationals") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational::parse("-3/6").str() == "-1/2");
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(1) / Rational(3) + Rational(2) / Rational(3) == Rational(1));
  }

  TEST_CASE("matrix composition and kronecker products") {
    CHECK(compose(SparseMat::identity(3), SparseMat::identity(3)) == SparseMat::identity(3));
    Rng rng(3);
    const auto a = catkit::testing::random_sparse(rng, 2, 3);
    CHECK(compose(a, SparseMat::identity(3)) == a);
    CHECK(compose(SparseMat::identity(2), a) == a);
    CHECK_THROWS_AS(compose(a, a), DimensionError);
    CHECK(kron(SparseMat::identity(2), SparseMat::identity(3)) == SparseMat::identity(6));
    const LaurentPoly s = v + 3;
    CHECK(kron(SparseMat::scalar(s), a) == a.scaled(s));
    // Left factor most significant.
    const auto b = catkit::testing::random_sparse(rng, 2, 2);
    const auto k = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) CHECK(k.at(i * 2 + r, j * 2 + c) == a.at(i, j) * b.at(r, c));
    // Mixed product rule.
    const auto c = catkit::testing::random_sparse(rng, 3, 2);
    const auto d = catkit::testing::random_sparse(rng, 2, 2);
    CHECK(compose(kron(a, b), kron(c, d)) == kron(compose(a, c), compose(b, d)));
  }

  TEST_CASE("traces and partial traces") {
    CHECK(trace(SparseMat::identity(5)) == LaurentPoly(5));
    CHECK(trace(SparseMat::zero(3, 3)).is_zero());
    CHECK(partial_trace(SparseMat::identity(4), 1, {2, 2}) == SparseMat::identity(2).scaled(2));
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
      const auto a = catkit::testing::random_sparse(rng, 2, 2);
      const auto b = catkit::testing::random_sparse(rng, 3, 3);
      CHECK(partial_trace(kron(a, b), 2, {2, 3}) == a.scaled(trace(b)));
      CHECK(partial_trace(kron(a, b), 1, {2, 3}) == b.scaled(trace(a)));
      CHECK(trace(kron(a, b)) == trace(a) * trace(b));
    }
    CHECK_THROWS(partial_trace(SparseMat::identity(4), 3, {2, 2}));
  }

  TEST_CASE("rational linear algebra") {
    const auto m = QMatrix::from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto k = kernel(m);
    CHECK(k.cols() == 1);
    CHECK(compose(m, k) == QMatrix::zero(3, 1));
    const auto rel = QMatrix::from_dense({{1}, {-1}, {0}});
    const auto quo = quotient_by_columns(3, {rel});
    CHECK(quo.dim() == 2);
    CHECK(compose(quo.project, quo.section) == QMatrix::identity(2));
    CHECK(compose(quo.project, rel) == QMatrix::zero(2, 1));
  }

  TEST_CASE("determinant and inverse over Z[v, v^-1]") {
    SparseMat r = SparseMat::zero(2, 2);
    r.set(0, 0, v);
    r.set(0, 1, 1);
    r.set(1, 1, v.pow(-1));
    CHECK(determinant(r) == LaurentPoly(1));
    const auto inv = invert(r);
    REQUIRE(inv.has_value());
    CHECK(compose(r, *inv) == SparseMat::identity(2));
    SparseMat s = SparseMat::identity(2);
    s.set(0, 0, v + 1);
    CHECK_FALSE(invert(s).has_value());
  }

  TEST_CASE("json round trips") {
    Rng rng(17);
    for (int i = 0; i < 10; ++i) {
      const auto p = catkit::testing::random_laurent(rng);
      CHECK(laurent_from_json(to_json(p)) == p);
      const auto m = catkit::testing::random_sparse(rng, 3, 2);
      CHECK(sparse_mat_from_json(to_json(m)) == m);
      const auto q = catkit::testing::random_qmatrix(rng, 2, 3);
      CHECK(qmatrix_from_json(to_json(q)) == q);
    }
    CHECK_THROWS_AS(sparse_mat_from_json(Json::parse(R"({"nrows": 1})")), ParseError);
    CHECK(rational_from_json(Json("3/9")) == Rational(BigInt(1), BigInt(3)));
  }
}
