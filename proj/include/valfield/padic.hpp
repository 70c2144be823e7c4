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

#ifndef VALFIELD_PADIC_HPP
#define VALFIELD_PADIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "valfield/valcore.hpp"

namespace valfield {

/// p^k, cached per thread. k >= 0.
const mpz_class& prime_power(std::int64_t p, std::int64_t k);

/// Element of Q_p at finite precision: p^v * (d_0 + d_1 p + ... + d_{n-1} p^{n-1})
/// with d_0 != 0, known modulo p^(v+n).
///
/// Zero has a single representation (valuation +infinity, no digits). It is
/// either exact, or "known to be 0 modulo p^M" after cancellation; equality
/// ignores that distinction, `absolute_precision()` exposes it.
///
/// Precision propagation is conservative: sums keep the smaller absolute
/// precision, products and quotients keep the smaller relative precision.
/// Nothing is ever zero-padded.
class PadicNumber {
 public:
  /// Exact zero in Q_p.
  static PadicNumber zero(std::int64_t p);
  /// Zero known only modulo p^abs_precision.
  static PadicNumber zero_mod(std::int64_t p, std::int64_t abs_precision);

  /// Canonical expansion of num/den truncated to n_digits digits past the
  /// leading one. Throws std::invalid_argument for den = 0, composite p or
  /// n_digits < 1.
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den, std::int64_t p,
                                   std::int64_t n_digits);
  static PadicNumber from_rational(const mpq_class& q, std::int64_t p, std::int64_t n_digits);

  /// From explicit digits; leading zeros are stripped into the valuation.
  static PadicNumber from_digits(std::int64_t p, std::int64_t valuation,
                                 const std::vector<std::uint32_t>& digits);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return kind_ != Kind::kUnit; }
  bool is_exact_zero() const { return kind_ == Kind::kExactZero; }

  ValRank valuation() const;
  /// Number of known digits; 0 for zero.
  std::int64_t relative_precision() const { return kind_ == Kind::kUnit ? prec_ : 0; }
  /// M such that the value is known modulo p^M; nullopt for an exact zero.
  std::optional<std::int64_t> absolute_precision() const;

  /// Integer unit part d_0 + d_1 p + ..., in [0, p^n).
  const mpz_class& unit() const { return unit_; }
  std::vector<std::uint32_t> digits() const;

  PadicNumber operator-() const;
  PadicNumber inverse() const;
  /// Multiplication by an exact rational; keeps relative precision.
  PadicNumber scaled(const mpq_class& c) const;

  /// Keeps only the first k digits. Throws PrecisionError if k exceeds the
  /// known digits.
  PadicNumber with_relative_precision(std::int64_t k) const;
  /// Reduces to absolute precision M (value modulo p^M). Throws
  /// PrecisionError if the value is not known that far.
  PadicNumber reduced_to(std::int64_t abs_precision) const;

  /// The truncated value as an exact rational.
  mpq_class to_rational() const;
  /// Integer in [0, p^M) congruent to the value; requires valuation >= 0 and
  /// absolute precision >= M.
  mpz_class residue(std::int64_t abs_precision) const;

  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) {
    return x * y.inverse();
  }
  friend bool operator==(const PadicNumber& x, const PadicNumber& y);

 private:
  enum class Kind { kUnit, kExactZero, kZeroMod };

  PadicNumber(std::int64_t p, Kind kind) : p_(p), kind_(kind) {}
  // p^v * value known modulo p^abs_precision; value may be divisible by p or negative.
  static PadicNumber combine(const PadicNumber& x, const PadicNumber& y, bool subtract);
  static PadicNumber normalize(std::int64_t p, std::int64_t v, mpz_class value,
                               std::int64_t abs_precision);

  std::int64_t p_ = 2;
  Kind kind_ = Kind::kExactZero;
  std::int64_t val_ = 0;
  std::int64_t prec_ = 0;  // relative digits, or M for kZeroMod
  mpz_class unit_;
};

/// nu_p(x) = min{n : a_n != 0}; +infinity at zero.
ValRank nu(const PadicNumber& x);
/// |x|_p = p^(-nu_p(x)).
AbsValue abs_p(const PadicNumber& x);

/// Sum of the first k terms of the expansion, sum_{i<k} d_i p^(v+i).
/// Throws std::out_of_range unless 0 <= k <= relative_precision().
mpq_class partial_sum(const PadicNumber& x, std::int64_t k);

struct SqrtResult {
  bool exists = false;
  std::optional<PadicNumber> witness;
  /// Leading digit of the unit part that had to be a square mod p.
  std::int64_t target_residue = 0;
  /// The nonzero squares mod p, ascending.
  std::vector<std::int64_t> squares_mod_p;
  std::string reason;
};

/// Decides whether u has a square root in Q_p (p odd) and, if it does,
/// Hensel-lifts one to max_lift digits: w^2 = u to max_lift relative digits.
/// Throws std::invalid_argument for p = 2 or max_lift < 1, PrecisionError if
/// a root must be lifted past the digits u carries.
SqrtResult sqrt_exists(const PadicNumber& u, std::int64_t max_lift);

/// Eventual periodicity of the digit stream of a rational.
struct DigitPeriod {
  std::int64_t valuation = 0;
  std::int64_t preperiod = 0;
  std::int64_t period = 0;
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> repetend;
  /// Step bound within which the cycle had to be found.
  std::int64_t search_bound = 0;
};

/// Finds preperiod and period of the digits of a nonzero rational. The cycle
/// is guaranteed within log_p(|a|) + 2 + (2b + 1) steps for unit part a/b.
DigitPeriod digit_period(const mpq_class& q, std::int64_t p);

/// Multiplicative order of p modulo m (m coprime to p, m >= 1).
std::int64_t multiplicative_order(std::int64_t p, const mpz_class& m);

/// "3·5^0 + 2·5 + 2·5^2 + ..." (every known term, zero digits included);
/// "0" for an exact zero and "O(5^M)" for zero modulo p^M.
std::string to_series_string(const PadicNumber& x);
/// "3,2,2,2@0(5)"; "0@inf(5)" exact zero, "0@inf(5)/M" zero modulo p^M.
std::string to_compact_string(const PadicNumber& x);

/// Inverse of to_series_string. "·" and "*" are both accepted; the prime is
/// read from the text, or from p_hint for the bare "0".
PadicNumber parse_series(std::string_view text, std::int64_t p_hint = 0);
/// Inverse of to_compact_string.
PadicNumber parse_compact(std::string_view text);

}  // namespace valfield

#endif  // VALFIELD_PADIC_HPP
