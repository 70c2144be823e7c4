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

#include "valfield/valcore.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace valfield {

std::int64_t ValRank::as_integer() const {
  if (infinite_) throw std::domain_error("rank is +infinity");
  if (twice_ % 2 != 0) throw std::domain_error("rank " + to_string() + " is not an integer");
  return twice_ / 2;
}

ValRank ValRank::halved() const {
  if (infinite_) return *this;
  return from_twice(as_integer());
}

ValRank ValRank::times(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("ValRank::times needs k >= 0");
  if (infinite_) return k == 0 ? ValRank{} : *this;
  return from_twice(twice_ * k);
}

std::string ValRank::to_string() const {
  if (infinite_) return "inf";
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

AbsValue::AbsValue(mpz_class base, ValRank exponent)
    : base_(std::move(base)), exponent_(exponent) {
  if (base_ <= 1) throw std::invalid_argument("absolute value base must exceed 1");
}

mpq_class AbsValue::to_rational() const {
  if (is_zero()) return 0;
  const std::int64_t e = exponent_.as_integer();
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base_.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpq_class r = e < 0 ? mpq_class(power) : mpq_class(mpz_class(1), power);
  r.canonicalize();
  return r;
}

std::string AbsValue::to_string() const {
  if (is_zero()) return "0";
  if (exponent_ == ValRank{}) return "1";
  const ValRank neg = ValRank::from_twice(-exponent_.twice());
  return base_.get_str() + "^(" + neg.to_string() + ")";
}

std::string AbsValue::to_decimal(int significant_digits) const {
  if (is_zero()) return "0";
  const long double b = std::log(static_cast<long double>(base_.get_d()));
  const long double v = std::exp(-b * static_cast<long double>(exponent_.twice()) / 2.0L);
  std::ostringstream os;
  os << std::setprecision(significant_digits) << v;
  return os.str();
}

AbsValue operator*(const AbsValue& x, const AbsValue& y) {
  if (x.base_ != y.base_) throw std::invalid_argument("absolute values over different bases");
  return AbsValue(x.base_, x.exponent_ + y.exponent_);
}

std::strong_ordering operator<=>(const AbsValue& x, const AbsValue& y) {
  if (x.base_ != y.base_) throw std::invalid_argument("absolute values over different bases");
  // larger exponent means smaller value
  return y.exponent_ <=> x.exponent_;
}

AbsValue max(const AbsValue& x, const AbsValue& y) { return x < y ? y : x; }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

ValRank nu_p(const mpz_class& n, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("nu_p needs p >= 2");
  if (sgn(n) == 0) return ValRank::infinity();
  mpz_class rest;
  const mpz_class prime(static_cast<long>(p));
  const auto k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  return ValRank::integer(static_cast<std::int64_t>(k));
}

ValRank nu_p(const mpq_class& q, std::int64_t p) {
  if (sgn(q) == 0) return ValRank::infinity();
  const ValRank top = nu_p(q.get_num(), p);
  const ValRank bottom = nu_p(q.get_den(), p);
  return ValRank::from_twice(top.twice() - bottom.twice());
}

AbsValue abs_p(const mpq_class& q, std::int64_t p) {
  return AbsValue(mpz_class(static_cast<long>(p)), nu_p(q, p));
}

mpq_class abs_0(const mpq_class& q) { return abs(q); }

mpq_class product_formula_residual(const mpq_class& q, std::int64_t prime_bound) {
  if (sgn(q) == 0) throw std::invalid_argument("product formula needs a nonzero rational");
  mpq_class residual = abs_0(q);
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  for (const std::int64_t p : primes_up_to(prime_bound)) {
    const mpz_class prime(static_cast<long>(p));
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
    residual *= abs_p(q, p).to_rational();
  }
  if (num != 1 || den != 1) {
    const mpz_class left = num * den;
    throw std::invalid_argument("prime bound " + std::to_string(prime_bound) +
                                " too small: cofactor " + left.get_str() + " remains");
  }
  residual.canonicalize();
  return residual;
}

}  // namespace valfield
