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

#include "valfield/padic.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "valfield/errors.hpp"

namespace valfield {
namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";
constexpr std::int64_t kMaxSqrtPrime = std::int64_t{1} << 24;

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31)) throw std::invalid_argument("prime too large for digit storage");
}

void require_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime()) {
    throw std::invalid_argument("mixed primes " + std::to_string(x.prime()) + " and " +
                                std::to_string(y.prime()));
  }
}

// Strips factors of p; returns how many were removed.
std::int64_t remove_p(mpz_class& value, std::int64_t p) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p))) return 0;
  return static_cast<std::int64_t>(
      mpz_remove(value.get_mpz_t(), value.get_mpz_t(), prime_power(p, 1).get_mpz_t()));
}

// c as a p-unit residue modulo p^n; c must have valuation 0.
mpz_class unit_residue(const mpq_class& c, std::int64_t p, std::int64_t n) {
  const mpz_class& mod = prime_power(p, n);
  mpz_class num = c.get_num() % mod;
  mpz_class den = c.get_den() % mod;
  if (num < 0) num += mod;
  if (den < 0) den += mod;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::logic_error("denominator not a p-unit");
  }
  mpz_class out = num * inv;
  mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), mod.get_mpz_t());
  return out;
}

}  // namespace

const mpz_class& prime_power(std::int64_t p, std::int64_t k) {
  thread_local std::unordered_map<std::int64_t, std::deque<mpz_class>> cache;
  thread_local std::int64_t last_prime = 0;
  thread_local std::deque<mpz_class>* last_powers = nullptr;
  if (k < 0) throw std::invalid_argument("negative exponent in prime_power");
  if (p != last_prime) {
    last_powers = &cache[p];
    last_prime = p;
    if (last_powers->empty()) last_powers->emplace_back(1);
  }
  auto& powers = *last_powers;
  while (static_cast<std::int64_t>(powers.size()) <= k) {
    powers.push_back(powers.back() * static_cast<unsigned long>(p));
  }
  return powers[static_cast<std::size_t>(k)];
}

PadicNumber PadicNumber::zero(std::int64_t p) { return PadicNumber(p, Kind::kExactZero); }

PadicNumber PadicNumber::zero_mod(std::int64_t p, std::int64_t abs_precision) {
  PadicNumber z(p, Kind::kZeroMod);
  z.prec_ = abs_precision;
  return z;
}

PadicNumber PadicNumber::normalize(std::int64_t p, std::int64_t v, mpz_class value,
                                   std::int64_t abs_precision) {
  if (abs_precision <= v) return zero_mod(p, abs_precision);
  const std::int64_t n0 = abs_precision - v;
  const mpz_class& mod = prime_power(p, n0);
  mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), mod.get_mpz_t());
  if (sgn(value) == 0) return zero_mod(p, abs_precision);
  const std::int64_t k = remove_p(value, p);
  PadicNumber out(p, Kind::kUnit);
  out.val_ = v + k;
  out.prec_ = n0 - k;
  out.unit_ = std::move(value);
  return out;
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den, std::int64_t p,
                                       std::int64_t n_digits) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  require_prime(p);
  if (n_digits < 1) throw std::invalid_argument("need at least one digit");
  if (sgn(num) == 0) return zero(p);
  mpz_class a = num;
  mpz_class b = den;
  const std::int64_t v = remove_p(a, p) - remove_p(b, p);
  PadicNumber out(p, Kind::kUnit);
  out.val_ = v;
  out.prec_ = n_digits;
  out.unit_ = unit_residue(mpq_class(a, b), p, n_digits);
  return out;
}

PadicNumber PadicNumber::from_rational(const mpq_class& q, std::int64_t p, std::int64_t n_digits) {
  return from_rational(q.get_num(), q.get_den(), p, n_digits);
}

PadicNumber PadicNumber::from_digits(std::int64_t p, std::int64_t valuation,
                                     const std::vector<std::uint32_t>& digits) {
  require_prime(p);
  mpz_class value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= static_cast<std::uint64_t>(p)) {
      throw std::invalid_argument("digit " + std::to_string(digits[i]) + " out of range");
    }
    value = value * static_cast<unsigned long>(p) + static_cast<unsigned long>(digits[i]);
  }
  return normalize(p, valuation, std::move(value),
                   valuation + static_cast<std::int64_t>(digits.size()));
}

ValRank PadicNumber::valuation() const {
  return kind_ == Kind::kUnit ? ValRank::integer(val_) : ValRank::infinity();
}

std::optional<std::int64_t> PadicNumber::absolute_precision() const {
  switch (kind_) {
    case Kind::kUnit:
      return val_ + prec_;
    case Kind::kZeroMod:
      return prec_;
    case Kind::kExactZero:
      break;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> PadicNumber::digits() const {
  std::vector<std::uint32_t> out;
  if (kind_ != Kind::kUnit) return out;
  out.reserve(static_cast<std::size_t>(prec_));
  mpz_class rest = unit_;
  for (std::int64_t i = 0; i < prec_; ++i) {
    out.push_back(static_cast<std::uint32_t>(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p_))));
  }
  return out;
}

PadicNumber PadicNumber::operator-() const {
  if (kind_ != Kind::kUnit) return *this;
  PadicNumber out = *this;
  out.unit_ = prime_power(p_, prec_) - unit_;
  return out;
}

PadicNumber PadicNumber::inverse() const {
  if (kind_ != Kind::kUnit) throw std::domain_error("zero has no inverse");
  PadicNumber out(p_, Kind::kUnit);
  out.val_ = -val_;
  out.prec_ = prec_;
  mpz_invert(out.unit_.get_mpz_t(), unit_.get_mpz_t(), prime_power(p_, prec_).get_mpz_t());
  return out;
}

PadicNumber PadicNumber::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return zero(p_);
  const std::int64_t k =
      (c.get_den() == 1 && !mpz_divisible_ui_p(c.get_num_mpz_t(), static_cast<unsigned long>(p_)))
          ? 0
          : nu_p(c, p_).as_integer();
  if (kind_ == Kind::kExactZero) return *this;
  if (kind_ == Kind::kZeroMod) return zero_mod(p_, prec_ + k);
  PadicNumber out(p_, Kind::kUnit);
  out.prec_ = prec_;
  const mpz_class& mod = prime_power(p_, prec_);
  if (k == 0 && c.get_den() == 1) {
    out.val_ = val_;
    mpz_mul(out.unit_.get_mpz_t(), unit_.get_mpz_t(), c.get_num_mpz_t());
    mpz_fdiv_r(out.unit_.get_mpz_t(), out.unit_.get_mpz_t(), mod.get_mpz_t());
    return out;
  }
  mpq_class rest = c;
  if (k > 0) rest /= prime_power(p_, k);
  if (k < 0) rest *= prime_power(p_, -k);
  out.val_ = val_ + k;
  out.unit_ = unit_ * unit_residue(rest, p_, prec_);
  mpz_fdiv_r(out.unit_.get_mpz_t(), out.unit_.get_mpz_t(), mod.get_mpz_t());
  return out;
}

PadicNumber PadicNumber::with_relative_precision(std::int64_t k) const {
  if (kind_ != Kind::kUnit) return *this;
  if (k < 1) throw std::invalid_argument("relative precision must be positive");
  if (k > prec_) {
    throw PrecisionError("requested " + std::to_string(k) + " digits but only " +
                         std::to_string(prec_) + " are known");
  }
  PadicNumber out = *this;
  out.prec_ = k;
  mpz_fdiv_r(out.unit_.get_mpz_t(), unit_.get_mpz_t(), prime_power(p_, k).get_mpz_t());
  return out;
}

PadicNumber PadicNumber::reduced_to(std::int64_t abs_precision) const {
  const auto known = absolute_precision();
  if (known && *known < abs_precision) {
    throw PrecisionError("value known modulo " + std::to_string(p_) + "^" +
                         std::to_string(*known) + ", needed " + std::to_string(abs_precision));
  }
  if (kind_ != Kind::kUnit || val_ >= abs_precision) return zero_mod(p_, abs_precision);
  return with_relative_precision(abs_precision - val_);
}

mpq_class PadicNumber::to_rational() const {
  if (kind_ != Kind::kUnit) return 0;
  mpq_class out(unit_);
  if (val_ >= 0) {
    out *= prime_power(p_, val_);
  } else {
    out /= prime_power(p_, -val_);
  }
  out.canonicalize();
  return out;
}

mpz_class PadicNumber::residue(std::int64_t abs_precision) const {
  const auto known = absolute_precision();
  if (known && *known < abs_precision) {
    throw PrecisionError("residue modulo " + std::to_string(p_) + "^" +
                         std::to_string(abs_precision) + " not determined");
  }
  if (kind_ != Kind::kUnit || val_ >= abs_precision) return 0;
  if (val_ < 0) throw std::domain_error("residue of a non-integral value");
  mpz_class out = unit_ * prime_power(p_, val_);
  mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), prime_power(p_, abs_precision).get_mpz_t());
  return out;
}

PadicNumber PadicNumber::combine(const PadicNumber& x, const PadicNumber& y, bool subtract) {
  require_same_prime(x, y);
  if (y.kind_ == Kind::kExactZero) return x;
  if (x.kind_ == Kind::kExactZero) return subtract ? -y : y;
  const std::int64_t p = x.p_;
  const std::int64_t m = std::min(*x.absolute_precision(), *y.absolute_precision());
  if (x.is_zero() && y.is_zero()) return zero_mod(p, m);
  if (y.is_zero()) return normalize(p, x.val_, x.unit_, m);
  if (x.is_zero()) return normalize(p, y.val_, subtract ? mpz_class(-y.unit_) : y.unit_, m);
  const std::int64_t v = std::min(x.val_, y.val_);
  if (m <= v) return zero_mod(p, m);
  const auto combine_into = subtract ? mpz_sub : mpz_add;
  mpz_class sum;
  if (x.val_ == v && y.val_ == v) {
    combine_into(sum.get_mpz_t(), x.unit_.get_mpz_t(), y.unit_.get_mpz_t());
  } else if (x.val_ == v) {
    mpz_class shifted = y.unit_ * prime_power(p, y.val_ - v);
    combine_into(sum.get_mpz_t(), x.unit_.get_mpz_t(), shifted.get_mpz_t());
  } else {
    mpz_mul(sum.get_mpz_t(), x.unit_.get_mpz_t(), prime_power(p, x.val_ - v).get_mpz_t());
    combine_into(sum.get_mpz_t(), sum.get_mpz_t(), y.unit_.get_mpz_t());
  }
  return normalize(p, v, std::move(sum), m);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  return PadicNumber::combine(x, y, false);
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) {
  return PadicNumber::combine(x, y, true);
}

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  using Kind = PadicNumber::Kind;
  const std::int64_t p = x.p_;
  if (x.kind_ == Kind::kExactZero || y.kind_ == Kind::kExactZero) return PadicNumber::zero(p);
  if (x.is_zero() || y.is_zero()) {
    // x = 0 mod p^Mx and |y| = p^-vy gives 0 mod p^(Mx + vy)
    const std::int64_t mx = x.is_zero() ? x.prec_ : x.val_;
    const std::int64_t my = y.is_zero() ? y.prec_ : y.val_;
    return PadicNumber::zero_mod(p, mx + my);
  }
  PadicNumber out(p, Kind::kUnit);
  out.val_ = x.val_ + y.val_;
  out.prec_ = std::min(x.prec_, y.prec_);
  mpz_mul(out.unit_.get_mpz_t(), x.unit_.get_mpz_t(), y.unit_.get_mpz_t());
  mpz_tdiv_r(out.unit_.get_mpz_t(), out.unit_.get_mpz_t(), prime_power(p, out.prec_).get_mpz_t());
  return out;
}

bool operator==(const PadicNumber& x, const PadicNumber& y) {
  if (x.p_ != y.p_) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.val_ == y.val_ && x.prec_ == y.prec_ && x.unit_ == y.unit_;
}

ValRank nu(const PadicNumber& x) { return x.valuation(); }

AbsValue abs_p(const PadicNumber& x) {
  return AbsValue(mpz_class(static_cast<long>(x.prime())), nu(x));
}

mpq_class partial_sum(const PadicNumber& x, std::int64_t k) {
  if (k < 0 || k > x.relative_precision()) {
    throw std::out_of_range("partial sum length " + std::to_string(k) + " outside [0, " +
                            std::to_string(x.relative_precision()) + "]");
  }
  if (k == 0) return 0;
  mpz_class head;
  mpz_fdiv_r(head.get_mpz_t(), x.unit().get_mpz_t(), prime_power(x.prime(), k).get_mpz_t());
  const std::int64_t v = x.valuation().as_integer();
  mpq_class out(head);
  if (v >= 0) {
    out *= prime_power(x.prime(), v);
  } else {
    out /= prime_power(x.prime(), -v);
  }
  out.canonicalize();
  return out;
}

SqrtResult sqrt_exists(const PadicNumber& u, std::int64_t max_lift) {
  const std::int64_t p = u.prime();
  if (p == 2) throw std::invalid_argument("square roots are only decided for odd p");
  if (p > kMaxSqrtPrime) throw std::invalid_argument("prime too large for residue search");
  if (max_lift < 1) throw std::invalid_argument("max_lift must be at least 1");

  SqrtResult out;
  std::set<std::int64_t> squares;
  for (std::int64_t r = 1; r < p; ++r) squares.insert(r * r % p);
  out.squares_mod_p.assign(squares.begin(), squares.end());

  if (u.is_zero()) {
    out.exists = true;
    out.witness = u;
    out.reason = "zero";
    return out;
  }
  const std::int64_t v = u.valuation().as_integer();
  out.target_residue = static_cast<std::int64_t>(
      mpz_fdiv_ui(u.unit().get_mpz_t(), static_cast<unsigned long>(p)));
  if (v % 2 != 0) {
    out.reason = "odd valuation";
    return out;
  }
  if (!squares.contains(out.target_residue)) {
    out.reason = "leading digit " + std::to_string(out.target_residue) + " is not a square mod " +
                 std::to_string(p);
    return out;
  }
  if (u.relative_precision() < max_lift) {
    throw PrecisionError("cannot lift to " + std::to_string(max_lift) + " digits; only " +
                         std::to_string(u.relative_precision()) + " known");
  }
  std::int64_t root = 1;
  while (root * root % p != out.target_residue) ++root;

  // Hensel: w_{k+1} = w_k + t p^k with 2 w_0 t = (u - w_k^2) / p^k mod p.
  mpz_class w = root;
  const mpz_class two_root(static_cast<long>(2 * root));
  mpz_class inv_two_root;
  mpz_invert(inv_two_root.get_mpz_t(), two_root.get_mpz_t(), prime_power(p, 1).get_mpz_t());
  for (std::int64_t k = 1; k < max_lift; ++k) {
    mpz_class diff = u.unit() - w * w;
    mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), prime_power(p, k + 1).get_mpz_t());
    mpz_divexact(diff.get_mpz_t(), diff.get_mpz_t(), prime_power(p, k).get_mpz_t());
    mpz_class t = diff * inv_two_root;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), prime_power(p, 1).get_mpz_t());
    w += t * prime_power(p, k);
  }
  std::vector<std::uint32_t> digits;
  mpz_class rest = w;
  for (std::int64_t i = 0; i < max_lift; ++i) {
    digits.push_back(static_cast<std::uint32_t>(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p))));
  }
  out.exists = true;
  out.witness = PadicNumber::from_digits(p, v / 2, digits);
  out.reason = "leading digit " + std::to_string(out.target_residue) + " = " +
               std::to_string(root) + "^2 mod " + std::to_string(p);
  return out;
}

std::int64_t multiplicative_order(std::int64_t p, const mpz_class& m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 1;
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
  if (g != 1) throw std::invalid_argument("p is not invertible modulo m");
  mpz_class acc = p % m;
  std::int64_t k = 1;
  while (acc != 1) {
    acc = acc * static_cast<unsigned long>(p) % m;
    ++k;
  }
  return k;
}

DigitPeriod digit_period(const mpq_class& q, std::int64_t p) {
  require_prime(p);
  if (sgn(q) == 0) throw std::invalid_argument("zero has no digit stream");
  mpz_class a = q.get_num();
  mpz_class b = q.get_den();
  DigitPeriod out;
  out.valuation = remove_p(a, p) - remove_p(b, p);

  const std::int64_t log_a = static_cast<std::int64_t>(
      mpz_sizeinbase(a.get_mpz_t(), static_cast<int>(std::min<std::int64_t>(p, 62))));
  if (!b.fits_slong_p() || b > 10'000'000) {
    throw std::invalid_argument("denominator too large for period search");
  }
  out.search_bound = log_a + 2 + 2 * b.get_si() + 1;

  mpz_class b_inv;
  mpz_invert(b_inv.get_mpz_t(), b.get_mpz_t(), prime_power(p, 1).get_mpz_t());
  std::map<mpz_class, std::int64_t> seen;
  std::vector<std::uint32_t> stream;
  for (std::int64_t step = 0; step <= out.search_bound; ++step) {
    const auto [it, fresh] = seen.emplace(a, step);
    if (!fresh) {
      out.preperiod = it->second;
      out.period = step - it->second;
      out.prefix.assign(stream.begin(), stream.begin() + out.preperiod);
      out.repetend.assign(stream.begin() + out.preperiod, stream.end());
      return out;
    }
    mpz_class d = a * b_inv;
    mpz_fdiv_r_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
    stream.push_back(static_cast<std::uint32_t>(d.get_ui()));
    a -= d * b;
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  }
  throw std::logic_error("digit cycle not found within bound");
}

std::string to_series_string(const PadicNumber& x) {
  const std::string p = std::to_string(x.prime());
  if (x.is_exact_zero()) return "0";
  if (x.is_zero()) return "O(" + p + "^" + std::to_string(*x.absolute_precision()) + ")";
  const std::int64_t v = x.valuation().as_integer();
  std::string out;
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::int64_t e = v + static_cast<std::int64_t>(i);
    out += std::to_string(digits[i]);
    out += kMiddleDot;
    out += p;
    if (e != 1) out += "^" + std::to_string(e);
    out += " + ";
  }
  return out + "...";
}

std::string to_compact_string(const PadicNumber& x) {
  const std::string p = std::to_string(x.prime());
  if (x.is_exact_zero()) return "0@inf(" + p + ")";
  if (x.is_zero()) return "0@inf(" + p + ")/" + std::to_string(*x.absolute_precision());
  std::string out;
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + "@" + x.valuation().to_string() + "(" + p + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("missing " + std::string(what));
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

PadicNumber parse_series(std::string_view text, std::int64_t p_hint) {
  text = trim(text);
  if (text == "0") {
    if (p_hint < 2) throw std::invalid_argument("bare 0 needs a prime hint");
    require_prime(p_hint);
    return PadicNumber::zero(p_hint);
  }
  if (text.starts_with("O(") && text.ends_with(")")) {
    const std::string_view inner = text.substr(2, text.size() - 3);
    const auto caret = inner.find('^');
    if (caret == std::string_view::npos) throw std::invalid_argument("expected O(p^M)");
    const std::int64_t p = parse_int(inner.substr(0, caret), "prime");
    require_prime(p);
    return PadicNumber::zero_mod(p, parse_int(inner.substr(caret + 1), "precision"));
  }

  std::vector<std::string_view> terms;
  while (true) {
    const auto plus = text.find(" + ");
    if (plus == std::string_view::npos) {
      terms.push_back(trim(text));
      break;
    }
    terms.push_back(trim(text.substr(0, plus)));
    text.remove_prefix(plus + 3);
  }
  if (terms.size() < 2 || terms.back() != "...") {
    throw std::invalid_argument("expansion must end with '+ ...'");
  }
  terms.pop_back();

  std::int64_t p = 0;
  std::int64_t first = 0;
  std::vector<std::uint32_t> digits;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string_view term = terms[i];
    std::size_t sep = term.find(kMiddleDot);
    std::size_t sep_len = kMiddleDot.size();
    if (sep == std::string_view::npos) {
      sep = term.find('*');
      sep_len = 1;
    }
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("term '" + std::string(term) + "' is not d·p^e");
    }
    const std::int64_t d = parse_int(term.substr(0, sep), "digit");
    std::string_view power = term.substr(sep + sep_len);
    std::int64_t e = 1;
    std::int64_t base = 0;
    if (const auto caret = power.find('^'); caret != std::string_view::npos) {
      base = parse_int(power.substr(0, caret), "prime");
      e = parse_int(power.substr(caret + 1), "exponent");
    } else {
      base = parse_int(power, "prime");
    }
    if (i == 0) {
      p = base;
      first = e;
      require_prime(p);
    } else if (base != p) {
      throw std::invalid_argument("mixed primes in expansion");
    } else if (e != first + static_cast<std::int64_t>(i)) {
      throw std::invalid_argument("exponents must be consecutive");
    }
    if (d < 0 || d >= p) throw std::invalid_argument("digit out of range");
    digits.push_back(static_cast<std::uint32_t>(d));
  }
  if (digits.front() == 0) throw std::invalid_argument("leading digit must be nonzero");
  return PadicNumber::from_digits(p, first, digits);
}

PadicNumber parse_compact(std::string_view text) {
  text = trim(text);
  const auto at = text.find('@');
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (at == std::string_view::npos || open == std::string_view::npos ||
      close == std::string_view::npos || !(at < open && open < close)) {
    throw std::invalid_argument("expected digits@valuation(p)");
  }
  const std::int64_t p = parse_int(text.substr(open + 1, close - open - 1), "prime");
  require_prime(p);
  const std::string_view val = trim(text.substr(at + 1, open - at - 1));
  const std::string_view tail = text.substr(close + 1);
  if (val == "inf") {
    if (trim(text.substr(0, at)) != "0") throw std::invalid_argument("infinite valuation needs 0");
    if (tail.empty()) return PadicNumber::zero(p);
    if (tail.front() != '/') throw std::invalid_argument("expected /M after zero");
    return PadicNumber::zero_mod(p, parse_int(tail.substr(1), "precision"));
  }
  if (!trim(tail).empty()) throw std::invalid_argument("trailing text after compact form");
  std::vector<std::uint32_t> digits;
  std::string_view list = text.substr(0, at);
  while (true) {
    const auto comma = list.find(',');
    const std::int64_t d = parse_int(list.substr(0, comma), "digit");
    if (d < 0 || d >= p) throw std::invalid_argument("digit out of range");
    digits.push_back(static_cast<std::uint32_t>(d));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (digits.front() == 0) throw std::invalid_argument("leading digit must be nonzero");
  return PadicNumber::from_digits(p, parse_int(val, "valuation"), digits);
}

}  // namespace valfield
