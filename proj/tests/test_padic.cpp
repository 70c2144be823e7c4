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
#include "valfield/errors.hpp"
#include "valfield/padic.hpp"

namespace valfield {
namespace {

using Digits = std::vector<std::uint32_t>;

PadicNumber q5(std::int64_t num, std::int64_t den, std::int64_t n = 12) {
  return PadicNumber::from_rational(num, den, 5, n);
}

TEST(FromRational, OneHalfInQ5) {
  const PadicNumber x = q5(1, 2, 5);
  EXPECT_EQ(x.valuation(), ValRank::integer(0));
  EXPECT_EQ(x.digits(), (Digits{3, 2, 2, 2, 2}));
}

TEST(FromRational, Zero) {
  const PadicNumber z = q5(0, 1, 7);
  EXPECT_TRUE(z.is_exact_zero());
  EXPECT_EQ(z.valuation(), ValRank::infinity());
  EXPECT_TRUE(z.digits().empty());
}

TEST(FromRational, MinusOne) {
  // 5^k - 1 = -1 mod 5^k.
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ((oracle::power(5, k) - 1 + 1) % oracle::power(5, k), 0);
  }
  EXPECT_EQ(oracle::digits(-1, 1, 5, 4), (Digits{4, 4, 4, 4}));
  const PadicNumber x = q5(-1, 1, 4);
  EXPECT_EQ(x.valuation(), ValRank::integer(0));
  EXPECT_EQ(x.digits(), (Digits{4, 4, 4, 4}));
}

TEST(FromRational, Errors) {
  EXPECT_THROW(PadicNumber::from_rational(1, 0, 5, 4), std::invalid_argument);
  EXPECT_THROW(PadicNumber::from_rational(1, 2, 6, 4), std::invalid_argument);
  EXPECT_THROW(PadicNumber::from_rational(1, 2, 5, 0), std::invalid_argument);
}

TEST(FromRational, DigitsAgreeWithLongDivision) {
  oracle::Sampler rng(21);
  for (int n = 0; n < 1000; ++n) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7, 11}[rng.draw(0, 4)];
    const mpq_class q = rng.rational(p);
    const PadicNumber x = PadicNumber::from_rational(q, p, 15);
    ASSERT_EQ(x.digits(), oracle::digits(q.get_num(), q.get_den(), p, 15)) << q.get_str();
    ASSERT_EQ(x.valuation(), ValRank::integer(oracle::valuation(q, p)));
  }
}

TEST(FieldOps, SpecCases) {
  const PadicNumber one = q5(1, 2) * q5(2, 1);
  EXPECT_EQ(one.digits(), (Digits{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(q5(1, 2) + q5(1, 2), q5(1, 1));
  const PadicNumber x = PadicNumber::from_rational(mpq_class(7, 25), 5, 6);
  const PadicNumber z = x + (-x);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.is_exact_zero());
  // x is known modulo 5^(-2 + 6).
  EXPECT_EQ(z.absolute_precision(), 4);
}

TEST(FieldOps, PrecisionPropagation) {
  const PadicNumber a = PadicNumber::from_rational(1, 1, 5, 10);  // mod 5^10
  const PadicNumber b = PadicNumber::from_rational(5, 1, 5, 3);   // mod 5^4
  EXPECT_EQ((a + b).absolute_precision(), 4);
  EXPECT_EQ((a * b).relative_precision(), 3);
  EXPECT_EQ(a.inverse().relative_precision(), 10);
  // Cancellation keeps the absolute precision and loses relative digits.
  const PadicNumber c = PadicNumber::from_rational(26, 1, 5, 10);
  const PadicNumber d = c - a;
  EXPECT_EQ(d.valuation(), ValRank::integer(2));
  EXPECT_EQ(d.absolute_precision(), 10);
  EXPECT_EQ(d.relative_precision(), 8);
  EXPECT_THROW(d.with_relative_precision(9), PrecisionError);
  EXPECT_THROW(d.reduced_to(11), PrecisionError);
  EXPECT_EQ(d.reduced_to(5).relative_precision(), 3);
}

TEST(FieldOps, Errors) {
  EXPECT_THROW(PadicNumber::zero(5).inverse(), std::domain_error);
  EXPECT_THROW(q5(1, 2) + PadicNumber::from_rational(1, 2, 3, 4), std::invalid_argument);
  EXPECT_THROW(q5(1, 2) * PadicNumber::from_rational(1, 2, 3, 4), std::invalid_argument);
}

TEST(FieldOps, AgreeWithRationalArithmetic) {
  oracle::Sampler rng(22);
  for (int n = 0; n < 2000; ++n) {
    const mpq_class a = rng.rational(5);
    const mpq_class b = rng.rational(5);
    const PadicNumber x = PadicNumber::from_rational(a, 5, 12);
    const PadicNumber y = PadicNumber::from_rational(b, 5, 12);
    const auto check = [](const PadicNumber& got, const mpq_class& want) {
      if (want == 0) return got.is_zero();
      const auto m = got.absolute_precision();
      const mpq_class diff = got.to_rational() - want;
      return diff == 0 || oracle::valuation(diff, 5) >= *m;
    };
    ASSERT_TRUE(check(x + y, a + b));
    ASSERT_TRUE(check(x - y, a - b));
    ASSERT_TRUE(check(x * y, a * b));
    ASSERT_TRUE(check(x / y, a / b));
  }
}

TEST(Nu, SpecCases) {
  EXPECT_EQ(nu(PadicNumber::zero(5)), ValRank::infinity());
  EXPECT_EQ(oracle::valuation(mpz_class(50), 5), 2);
  EXPECT_EQ(nu(q5(50, 1)), ValRank::integer(2));
  EXPECT_EQ(nu(q5(1, 1)), ValRank::integer(0));
}

TEST(AbsP, SpecCases) {
  EXPECT_EQ(oracle::valuation(mpq_class(1, 2), 5), 0);
  EXPECT_EQ(abs_p(q5(1, 2)), AbsValue::one(5));
  EXPECT_TRUE(abs_p(PadicNumber::zero(5)).is_zero());
  EXPECT_EQ(abs_p(q5(50, 1)).to_string(), "5^(-2)");
}

TEST(PartialSum, SpecCases) {
  EXPECT_EQ(partial_sum(q5(1, 2), 2), 13);
  EXPECT_EQ(partial_sum(q5(1, 2), 0), 0);
  EXPECT_EQ(partial_sum(q5(-7, 3), 0), 0);
  EXPECT_EQ(4 + 4 * 5 + 4 * 25, 124);
  EXPECT_EQ(partial_sum(q5(-1, 1, 4), 3), 124);
  EXPECT_THROW(partial_sum(q5(-1, 1, 4), 5), std::out_of_range);
  EXPECT_THROW(partial_sum(q5(-1, 1, 4), -1), std::out_of_range);
}

TEST(PartialSum, ConvergesToTheRational) {
  oracle::Sampler rng(23);
  for (int n = 0; n < 1000; ++n) {
    const std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[rng.draw(0, 2)];
    const mpq_class q = rng.rational(p);
    const PadicNumber x = PadicNumber::from_rational(q, p, 10);
    const std::int64_t v = x.valuation().as_integer();
    for (std::int64_t k = 0; k <= 10; ++k) {
      const mpq_class rest = q - partial_sum(x, k);
      ASSERT_GE(oracle::valuation(rest, p), v + k) << q.get_str() << " k=" << k;
    }
  }
}

TEST(StrongTriangle, RandomPairs) {
  oracle::Sampler rng(24);
  for (const std::int64_t p : {3, 5}) {
    for (int n = 0; n < 5000; ++n) {
      const PadicNumber x = PadicNumber::from_rational(rng.rational(p), p, 10);
      const PadicNumber y = PadicNumber::from_rational(rng.rational(p), p, 10);
      const ValRank s = nu(x + y);
      ASSERT_GE(s, min(nu(x), nu(y)));
      if (nu(x) != nu(y)) {
        ASSERT_EQ(s, min(nu(x), nu(y)));
      }
      ASSERT_LE(abs_p(x + y), max(abs_p(x), abs_p(y)));
      ASSERT_EQ(nu(x * y), nu(x) + nu(y));
    }
  }
}

TEST(Periodicity, DigitsRepeatAsReported) {
  oracle::Sampler rng(25);
  for (int n = 0; n < 300; ++n) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng.draw(0, 3)];
    const mpq_class q = rng.rational(p, 2000);
    const DigitPeriod d = digit_period(q, p);
    ASSERT_GE(d.period, 1);
    ASSERT_LE(d.preperiod + d.period, d.search_bound);
    const std::int64_t len = d.preperiod + 3 * d.period;
    const Digits ds = oracle::digits(q.get_num(), q.get_den(), p, len);
    for (std::int64_t i = d.preperiod; i + d.period < len; ++i) {
      ASSERT_EQ(ds[i], ds[i + d.period]) << q.get_str() << " p=" << p;
    }
    if (d.preperiod > 0) {
      // The reported preperiod is minimal.
      ASSERT_NE(ds[d.preperiod - 1], ds[d.preperiod - 1 + d.period]) << q.get_str();
    }
  }
}

TEST(Periodicity, OneHalfAndMinusOne) {
  const DigitPeriod h = digit_period(mpq_class(1, 2), 5);
  EXPECT_EQ(h.preperiod, 1);
  EXPECT_EQ(h.period, 1);
  EXPECT_EQ(h.repetend, (Digits{2}));
  const DigitPeriod m = digit_period(mpq_class(-1), 5);
  EXPECT_EQ(m.preperiod, 0);
  EXPECT_EQ(m.repetend, (Digits{4}));
}

TEST(SqrtExists, TwoIsNotASquareIn5Adics) {
  const SqrtResult r = sqrt_exists(q5(2, 1), 8);
  EXPECT_FALSE(r.exists);
  EXPECT_EQ(r.squares_mod_p, (std::vector<std::int64_t>{1, 4}));
  EXPECT_EQ(r.target_residue, 2);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(SqrtExists, FourAndMinusOne) {
  const SqrtResult four = sqrt_exists(q5(4, 1), 8);
  ASSERT_TRUE(four.exists);
  EXPECT_EQ(four.witness->digits().front(), 2u);
  EXPECT_EQ(*four.witness * *four.witness, q5(4, 1, 8));

  for (std::int64_t k = 1; k <= 6; ++k) EXPECT_TRUE(oracle::has_sqrt_mod(-1, 5, k));
  const SqrtResult i = sqrt_exists(q5(-1, 1), 6);
  ASSERT_TRUE(i.exists);
  const std::uint32_t lead = i.witness->digits().front();
  EXPECT_TRUE(lead == 2 || lead == 3);
  EXPECT_EQ(*i.witness * *i.witness, q5(-1, 1, 6));
}

TEST(SqrtExists, Errors) {
  EXPECT_THROW(sqrt_exists(PadicNumber::from_rational(3, 1, 2, 5), 3), std::invalid_argument);
  EXPECT_THROW(sqrt_exists(q5(4, 1, 3), 5), PrecisionError);
  const SqrtResult odd = sqrt_exists(q5(10, 1), 4);
  EXPECT_FALSE(odd.exists);
  EXPECT_EQ(odd.reason, "odd valuation");
}

TEST(SqrtExists, AgreesWithResidueSearch) {
  for (const std::int64_t p : {3, 5, 7}) {
    for (std::int64_t u = 1; u <= 100; ++u) {
      for (std::int64_t k = 1; k <= 6; ++k) {
        const SqrtResult r = sqrt_exists(PadicNumber::from_rational(u, 1, p, 8), k);
        ASSERT_EQ(r.exists, oracle::has_sqrt_mod(u, p, k)) << "u=" << u << " p=" << p << " k=" << k;
        if (r.exists) {
          const PadicNumber w = *r.witness;
          const mpq_class diff = w.to_rational() * w.to_rational() - u;
          ASSERT_TRUE(diff == 0 || oracle::valuation(diff, p) >= nu(w).as_integer() * 2 + k);
        }
      }
    }
  }
}

TEST(Text, SeriesForm) {
  EXPECT_EQ(to_series_string(q5(1, 2, 5)), "3·5^0 + 2·5 + 2·5^2 + 2·5^3 + 2·5^4 + ...");
  EXPECT_EQ(to_series_string(q5(-1, 1, 4)), "4·5^0 + 4·5 + 4·5^2 + 4·5^3 + ...");
  EXPECT_EQ(to_series_string(PadicNumber::zero(5)), "0");
  EXPECT_EQ(to_series_string(PadicNumber::zero_mod(5, 3)), "O(5^3)");
}

TEST(Text, CompactForm) {
  EXPECT_EQ(to_compact_string(q5(1, 2, 4)), "3,2,2,2@0(5)");
  EXPECT_EQ(to_compact_string(PadicNumber::zero(5)), "0@inf(5)");
  EXPECT_EQ(to_compact_string(PadicNumber::zero_mod(5, 3)), "0@inf(5)/3");
  EXPECT_EQ(to_compact_string(PadicNumber::from_rational(mpq_class(2, 25), 5, 2)), "2,0@-2(5)");
}

TEST(Text, RoundTrips) {
  oracle::Sampler rng(26);
  std::vector<PadicNumber> xs{PadicNumber::zero(7), PadicNumber::zero_mod(7, -2)};
  for (int n = 0; n < 300; ++n) {
    xs.push_back(PadicNumber::from_rational(rng.rational(7), 7, rng.draw(1, 9)));
  }
  for (const auto& x : xs) {
    const PadicNumber a = parse_series(to_series_string(x), 7);
    const PadicNumber b = parse_compact(to_compact_string(x));
    ASSERT_EQ(a, x);
    ASSERT_EQ(a.absolute_precision(), x.absolute_precision());
    ASSERT_EQ(b, x);
    ASSERT_EQ(b.absolute_precision(), x.absolute_precision());
  }
  EXPECT_THROW(parse_compact("1,2@0"), std::invalid_argument);
  EXPECT_THROW(parse_compact("7@0(5)"), std::invalid_argument);
  EXPECT_THROW(parse_series("3·5^0 + 2·7 + ...", 0), std::invalid_argument);
}

}  // namespace
}  // namespace valfield
