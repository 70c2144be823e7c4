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

#ifndef VALFIELD_VALCORE_HPP
#define VALFIELD_VALCORE_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace valfield {

/// Value of a valuation logarithm: an element of (1/2)Z or +infinity.
///
/// Stored as twice the rank so half-integer exponents (quaternion norms,
/// ramified values) stay exact in a single integer.
class ValRank {
 public:
  constexpr ValRank() = default;

  static constexpr ValRank integer(std::int64_t n) { return ValRank(2 * n, false); }
  static constexpr ValRank from_twice(std::int64_t twice) { return ValRank(twice, false); }
  static constexpr ValRank infinity() { return ValRank(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_integer() const { return !infinite_ && twice_ % 2 == 0; }
  /// Twice the rank; meaningless for +infinity.
  constexpr std::int64_t twice() const { return twice_; }

  /// The rank as an integer. Throws if infinite or a half-integer.
  std::int64_t as_integer() const;

  /// rank / 2, e.g. omega = nu(x g(x)) / 2. Requires an integer rank.
  ValRank halved() const;

  /// k * rank with k >= 0; 0 * infinity is taken to be 0.
  ValRank times(std::int64_t k) const;

  friend constexpr ValRank operator+(ValRank a, ValRank b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ValRank(a.twice_ + b.twice_, false);
  }

  friend constexpr bool operator==(ValRank a, ValRank b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.twice_ == b.twice_);
  }

  friend constexpr std::strong_ordering operator<=>(ValRank a, ValRank b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.twice_ <=> b.twice_;
  }

  /// "3", "-1/2", "inf".
  std::string to_string() const;

 private:
  constexpr ValRank(std::int64_t twice, bool infinite) : twice_(twice), infinite_(infinite) {}

  std::int64_t twice_ = 0;
  bool infinite_ = false;
};

constexpr ValRank min(ValRank a, ValRank b) { return b < a ? b : a; }

/// Exact absolute value base^(-exponent); exponent +infinity encodes |0| = 0.
class AbsValue {
 public:
  AbsValue(mpz_class base, ValRank exponent);

  static AbsValue zero(mpz_class base) { return AbsValue(std::move(base), ValRank::infinity()); }
  static AbsValue one(mpz_class base) { return AbsValue(std::move(base), ValRank{}); }

  const mpz_class& base() const { return base_; }
  ValRank exponent() const { return exponent_; }
  bool is_zero() const { return exponent_.is_infinite(); }

  /// Exact value as a rational; requires an integer exponent.
  mpq_class to_rational() const;

  /// "0", "1", "5^(-2)", "5^(-1/2)", "2^(3)".
  std::string to_string() const;

  /// Approximate decimal, for display only.
  std::string to_decimal(int significant_digits = 12) const;

  friend AbsValue operator*(const AbsValue& x, const AbsValue& y);

  friend bool operator==(const AbsValue& x, const AbsValue& y) {
    return x.base_ == y.base_ && x.exponent_ == y.exponent_;
  }

  /// Ordering by size; both sides must share a base.
  friend std::strong_ordering operator<=>(const AbsValue& x, const AbsValue& y);

 private:
  mpz_class base_;
  ValRank exponent_;
};

AbsValue max(const AbsValue& x, const AbsValue& y);

// Trivial valuation: |x| = 0 for x = 0 and 1 otherwise. The base is
// irrelevant to the value; 2 is used.
template <class T>
AbsValue trivial_valuation(const T& x) {
  bool zero = false;
  if constexpr (std::is_arithmetic_v<T>) {
    zero = (x == 0);
  } else if constexpr (std::is_same_v<T, mpq_class> || std::is_same_v<T, mpz_class>) {
    zero = (sgn(x) == 0);
  } else {
    zero = x.is_zero();
  }
  return zero ? AbsValue::zero(2) : AbsValue::one(2);
}

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// p-adic valuation of a nonzero integer; +infinity at zero.
ValRank nu_p(const mpz_class& n, std::int64_t p);
ValRank nu_p(const mpq_class& q, std::int64_t p);

/// |q|_p = p^(-nu_p(q)) for a rational q.
AbsValue abs_p(const mpq_class& q, std::int64_t p);

/// The ordinary absolute value of a rational; written |q|_0 in the
/// convention where |.|_infinity is the trivial valuation.
mpq_class abs_0(const mpq_class& q);

/// |q|_0 * prod_{p <= prime_bound} |q|_p, which equals 1 for every nonzero
/// rational. Throws std::invalid_argument if q = 0 or if a prime factor of
/// q exceeds prime_bound.
mpq_class product_formula_residual(const mpq_class& q, std::int64_t prime_bound);

}  // namespace valfield

#endif  // VALFIELD_VALCORE_HPP
