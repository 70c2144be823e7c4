// Copyright 2026 The valfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "valfield/valcore.hpp"

namespace valfield {
namespace {

TEST(ValRank, HalfIntegersAndInfinity) {
  EXPECT_EQ(ValRank::from_twice(-1).to_string(), "-1/2");
  EXPECT_EQ(ValRank::integer(3).to_string(), "3");
  EXPECT_EQ(ValRank::infinity().to_string(), "inf");
  EXPECT_EQ(ValRank::integer(3).halved(), ValRank::from_twice(3));
  EXPECT_THROW(ValRank::from_twice(1).as_integer(), std::domain_error);
  EXPECT_THROW(ValRank::infinity().as_integer(), std::domain_error);
  EXPECT_EQ(ValRank::infinity().times(0), ValRank{});
  EXPECT_LT(ValRank::integer(1000000), ValRank::infinity());
}

TEST(ValRank, AdditionLawsOnSmallRanks) {
  std::vector<ValRank> ranks{ValRank::infinity()};
  for (std::int64_t t = -6; t <= 6; ++t) ranks.push_back(ValRank::from_twice(t));
  for (const auto a : ranks) {
    EXPECT_EQ(a + ValRank::infinity(), ValRank::infinity());
    for (const auto b : ranks) {
      EXPECT_EQ(a + b, b + a);
      for (const auto c : ranks) EXPECT_EQ((a + b) + c, a + (b + c));
    }
  }
}

TEST(ValRank, AdditionIsExactOnRandomRanks) {
  oracle::Sampler rng(11);
  for (int n = 0; n < 10000; ++n) {
    const auto x = rng.draw(-1000000, 1000000);
    const auto y = rng.draw(-1000000, 1000000);
    EXPECT_EQ((ValRank::from_twice(x) + ValRank::from_twice(y)).twice(), x + y);
  }
}

TEST(AbsValue, RenderingAndOrder) {
  EXPECT_EQ(AbsValue::zero(5).to_string(), "0");
  EXPECT_EQ(AbsValue::one(5).to_string(), "1");
  EXPECT_EQ(AbsValue(5, ValRank::integer(2)).to_string(), "5^(-2)");
  EXPECT_EQ(AbsValue(5, ValRank::from_twice(1)).to_string(), "5^(-1/2)");
  EXPECT_EQ(AbsValue(5, ValRank::integer(2)).to_rational(), mpq_class(1, 25));
  EXPECT_LT(AbsValue(5, ValRank::integer(2)), AbsValue(5, ValRank::integer(1)));
  EXPECT_LT(AbsValue::zero(5), AbsValue(5, ValRank::integer(40)));
  EXPECT_EQ(AbsValue(5, ValRank::from_twice(1)) * AbsValue(5, ValRank::from_twice(1)),
            AbsValue(5, ValRank::integer(1)));
  EXPECT_THROW(AbsValue(1, ValRank{}), std::invalid_argument);
}

TEST(TrivialValuation, TakesValuesZeroAndOne) {
  EXPECT_TRUE(trivial_valuation(mpq_class(0)).is_zero());
  EXPECT_EQ(trivial_valuation(mpq_class(1)), AbsValue::one(2));
  EXPECT_EQ(trivial_valuation(mpq_class(7, 3)), AbsValue::one(2));
  EXPECT_EQ(trivial_valuation(trivial_valuation(mpq_class(7, 3)).to_rational()), AbsValue::one(2));
}

TEST(TrivialValuation, IsMultiplicative) {
  oracle::Sampler rng(12);
  for (int n = 0; n < 2000; ++n) {
    const mpq_class x = rng.draw(0, 3) ? rng.rational(5) : mpq_class(0);
    const mpq_class y = rng.draw(0, 3) ? rng.rational(5) : mpq_class(0);
    EXPECT_EQ(trivial_valuation(mpq_class(x * y)), trivial_valuation(x) * trivial_valuation(y));
  }
}

TEST(Valuations, AgreeWithTrialDivision) {
  oracle::Sampler rng(13);
  for (int n = 0; n < 1000; ++n) {
    const mpq_class q = rng.rational(3);
    for (const std::int64_t p : {2, 3, 5, 7}) {
      EXPECT_EQ(nu_p(q, p), ValRank::integer(oracle::valuation(q, p)));
    }
  }
  EXPECT_EQ(nu_p(mpz_class(0), 5), ValRank::infinity());
  EXPECT_EQ(abs_p(mpq_class(50), 5).to_string(), "5^(-2)");
  EXPECT_EQ(abs_0(mpq_class(-3, 4)), mpq_class(3, 4));
}

TEST(ProductFormula, SpecCases) {
  // |1/2|_0 = 1/2, |1/2|_2 = 2, |1/2|_3 = 1.
  EXPECT_EQ(oracle::product_formula(mpq_class(1, 2)), 1);
  EXPECT_EQ(product_formula_residual(mpq_class(1, 2), 3), 1);
  EXPECT_EQ(product_formula_residual(mpq_class(1), 2), 1);
  // |50|_0 = 50, |50|_2 = 1/2, |50|_5 = 1/25.
  EXPECT_EQ(oracle::factor(mpq_class(50)), (std::map<std::int64_t, std::int64_t>{{2, 1}, {5, 2}}));
  EXPECT_EQ(product_formula_residual(mpq_class(50), 7), 1);
}

TEST(ProductFormula, Errors) {
  EXPECT_THROW(product_formula_residual(mpq_class(0), 7), std::invalid_argument);
  EXPECT_THROW(product_formula_residual(mpq_class(11, 2), 7), std::invalid_argument);
}

TEST(ProductFormula, RandomRationalsWithSmallFactors) {
  oracle::Sampler rng(14);
  const std::vector<std::int64_t> primes = primes_up_to(97);
  ASSERT_EQ(primes.size(), 25u);
  for (int n = 0; n < 1000; ++n) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (int f = rng.draw(0, 5); f > 0; --f) num *= primes[rng.draw(0, 24)];
    for (int f = rng.draw(0, 5); f > 0; --f) den *= primes[rng.draw(0, 24)];
    mpq_class q(num, den);
    q.canonicalize();
    ASSERT_EQ(oracle::product_formula(q), 1);
    ASSERT_EQ(product_formula_residual(q, 100), 1) << q.get_str();
  }
}

}  // namespace
}  // namespace valfield
