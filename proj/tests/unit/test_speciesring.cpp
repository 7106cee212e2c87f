#include "doctest.h"

#include "catkit/errors.hpp"
#include "catkit/partition.hpp"
#include "catkit/species.hpp"
#include "cauchy_oracle.hpp"
#include "random.hpp"

using namespace catkit;
using namespace catkit::species;
using catkit::testing::Rng;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

ClassFunction random_class_function(Rng& rng, int n) {
  auto f = ClassFunction::zero(n);
  for (const auto& lambda : partitions_of(n)) f.set(lambda, catkit::testing::random_rational(rng));
  return f;
}
}  // namespace

TEST_SUITE("speciesring") {
  TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).front() == P({5}));
    CHECK(partitions_of(5).back() == P({1, 1, 1, 1, 1}));
    CHECK(P({1, 3, 1}).str() == "[3,1,1]");
    CHECK(P({2, 2, 1}).z() == 8);
    CHECK(P({3}).class_size() == 2);
    CHECK(cycle_type({1, 0, 2}) == P({2, 1}));
    CHECK_THROWS_AS(P({2, 0}), DomainError);
    BigInt total = 0;
    for (const auto& l : partitions_of(5)) total += l.class_size();
    CHECK(total == factorial(5));
    CHECK(partition_from_string("[2,1,1]") == P({2, 1, 1}));
  }

  TEST_CASE("cauchy product examples") {
    const auto one = ClassFunction::constant(1, 1);
    const auto sq = cauchy_product(one, one);
    CHECK(sq.at(P({1, 1})) == Rational(2));
    CHECK(sq.at(P({2})) == Rational(0));
    Rng rng(5);
    const auto f = random_class_function(rng, 3);
    CHECK(cauchy_product(f, ClassFunction::unit()) == f);
    CHECK(cauchy_product(ClassFunction::unit(), f) == f);
    const auto a = random_class_function(rng, 2);
    const auto b = random_class_function(rng, 3);
    CHECK(cauchy_product(a, b) == cauchy_product(b, a));
  }

  TEST_CASE("cauchy product against invariant subsets") {
    Rng rng(55);
    for (int n = 0; n <= 5; ++n)
      for (int a = 0; a <= n; ++a) {
        const auto f = random_class_function(rng, a);
        const auto g = random_class_function(rng, n - a);
        const auto expected = oracle::cauchy_by_invariant_subsets(f, g);
        CHECK(cauchy_product(f, g) == expected);
        CHECK(cauchy_product_by_subsets(f, g) == expected);
      }
  }

  TEST_CASE("hadamard product") {
    Rng rng(6);
    const auto f = random_class_function(rng, 3);
    CHECK(hadamard_product(f, ClassFunction::constant(3, 1)) == f);
    CHECK(hadamard_product(ClassFunction::sign(2), ClassFunction::sign(2)) == ClassFunction::constant(2, 1));
    CHECK(hadamard_product(f, ClassFunction::zero(3)) == ClassFunction::zero(3));
    CHECK_THROWS_AS(hadamard_product(f, ClassFunction::zero(2)), DimensionError);
  }

  TEST_CASE("characteristic map") {
    const Rational half(BigInt(1), BigInt(2));
    const auto triv = char_map(ClassFunction::constant(2, 1));
    CHECK(triv == SymFunc::power_sum(P({1, 1})).scaled(half) + SymFunc::power_sum(P({2})).scaled(half));
    const auto sgn = char_map(ClassFunction::sign(2));
    CHECK(sgn == SymFunc::power_sum(P({1, 1})).scaled(half) - SymFunc::power_sum(P({2})).scaled(half));
    CHECK(char_map(ClassFunction::unit()) == SymFunc::constant(1));
    Rng rng(7);
    const auto f = random_class_function(rng, 4);
    CHECK(char_inverse(char_map(f), 4) == f);
    const auto a = random_class_function(rng, 2);
    const auto b = random_class_function(rng, 2);
    CHECK(sym_mul(char_map(a), char_map(b)) == char_map(cauchy_product(a, b)));
    CHECK_THROWS_AS(char_map(f, 3), DimensionError);
  }

  TEST_CASE("plethysm and species counts") {
    Rng rng(8);
    auto g = SymFunc::power_sum(P({2})) + SymFunc::power_sum(P({1, 1})).scaled(3);
    CHECK(plethysm(SymFunc::power_sum(P({1})), g) == g);
    CHECK_THROWS_AS(plethysm(g, SymFunc::constant(1)), DomainError);
    const auto bell = species_counts(plethysm(exp_series(), exp_plus_series()), 6);
    CHECK(bell == std::vector<BigInt>{1, 1, 2, 5, 15, 52, 203});
    CHECK(species_counts(exp_series(), 5) == std::vector<BigInt>(6, 1));
    CHECK(species_counts(SymFunc(), 3) == std::vector<BigInt>(4, 0));
    // Linear orders: p_1^n has n! structures.
    CHECK(species_counts(plethysm(exp_series(), SymFunc::power_sum(P({1}))), 4) == std::vector<BigInt>(5, 1));
  }

  TEST_CASE("json") {
    Rng rng(9);
    const auto f = random_class_function(rng, 3);
    CHECK(class_function_from_json(to_json(f), 3) == f);
    const auto s = char_map(f);
    CHECK(symfunc_from_json(to_json(s)) == s);
    CHECK_THROWS_AS(class_function_from_json(Json::parse(R"({"[4]": 1})"), 3), DimensionError);
  }
}
