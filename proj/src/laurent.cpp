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

#include "valfield/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "valfield/errors.hpp"

namespace valfield {
namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31)) throw std::invalid_argument("prime too large");
}

std::uint32_t reduce(std::int64_t c, std::int64_t p) {
  std::int64_t r = c % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

LaurentSeries LaurentSeries::zero(std::int64_t p) {
  require_prime(p);
  return LaurentSeries(p);
}

LaurentSeries LaurentSeries::zero_mod(std::int64_t p, std::int64_t abs_precision) {
  LaurentSeries z = zero(p);
  z.zero_precision_ = abs_precision;
  return z;
}

LaurentSeries LaurentSeries::normalize(std::int64_t p, std::int64_t degree,
                                       std::vector<std::uint32_t> coeffs) {
  const std::int64_t m = degree + static_cast<std::int64_t>(coeffs.size());
  const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; });
  if (lead == coeffs.end()) return zero_mod(p, m);
  LaurentSeries out(p);
  out.degree_ = degree + (lead - coeffs.begin());
  coeffs.erase(coeffs.begin(), lead);
  out.coeffs_ = std::move(coeffs);
  return out;
}

LaurentSeries LaurentSeries::from_terms(std::int64_t p,
                                        const std::map<std::int64_t, std::int64_t>& terms,
                                        std::int64_t abs_precision) {
  require_prime(p);
  std::int64_t lowest = abs_precision;
  for (const auto& [k, c] : terms) {
    if (k >= abs_precision) {
      throw std::invalid_argument("term T^" + std::to_string(k) + " beyond precision");
    }
    if (reduce(c, p) != 0) lowest = std::min(lowest, k);
  }
  if (lowest == abs_precision) return zero_mod(p, abs_precision);
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(abs_precision - lowest), 0);
  for (const auto& [k, c] : terms) {
    if (k >= lowest) coeffs[static_cast<std::size_t>(k - lowest)] = reduce(c, p);
  }
  return normalize(p, lowest, std::move(coeffs));
}

LaurentSeries LaurentSeries::monomial(std::int64_t p, std::int64_t c, std::int64_t k,
                                      std::int64_t n_terms) {
  if (n_terms < 1) throw std::invalid_argument("need at least one known term");
  return from_terms(p, {{k, c}}, k + n_terms);
}

ValRank LaurentSeries::min_degree() const {
  return is_zero() ? ValRank::infinity() : ValRank::integer(degree_);
}

std::optional<std::int64_t> LaurentSeries::absolute_precision() const {
  if (!is_zero()) return degree_ + relative_precision();
  return zero_precision_;
}

std::uint32_t LaurentSeries::coefficient(std::int64_t k) const {
  const auto known = absolute_precision();
  if (known && k >= *known) {
    throw PrecisionError("coefficient of T^" + std::to_string(k) + " is not known");
  }
  if (is_zero() || k < degree_) return 0;
  return coeffs_[static_cast<std::size_t>(k - degree_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = reduce(-static_cast<std::int64_t>(c), p_);
  return out;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  const auto p = static_cast<std::uint64_t>(p_);
  const std::size_t n = coeffs_.size();
  const std::uint64_t lead_inv = inverse_mod(coeffs_[0], p);
  std::vector<std::uint32_t> g(n, 0);
  g[0] = static_cast<std::uint32_t>(lead_inv);
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc = (acc + std::uint64_t{coeffs_[j]} * g[k - j]) % p;
    g[k] = static_cast<std::uint32_t>((p - acc) % p * lead_inv % p);
  }
  LaurentSeries out(p_);
  out.degree_ = -degree_;
  out.coeffs_ = std::move(g);
  return out;
}

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.p_ != y.p_) throw std::invalid_argument("series over different primes");
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const std::int64_t p = x.p_;
  const std::int64_t m = std::min(*x.absolute_precision(), *y.absolute_precision());
  if (x.is_zero() && y.is_zero()) return LaurentSeries::zero_mod(p, m);
  std::int64_t low = m;
  if (!x.is_zero()) low = std::min(low, x.degree_);
  if (!y.is_zero()) low = std::min(low, y.degree_);
  if (m <= low) return LaurentSeries::zero_mod(p, m);
  std::vector<std::uint32_t> sum(static_cast<std::size_t>(m - low), 0);
  for (const LaurentSeries* s : {&x, &y}) {
    for (std::size_t i = 0; i < s->coeffs_.size(); ++i) {
      const std::int64_t k = s->degree_ + static_cast<std::int64_t>(i);
      if (k >= m) break;
      auto& slot = sum[static_cast<std::size_t>(k - low)];
      slot = static_cast<std::uint32_t>((std::uint64_t{slot} + s->coeffs_[i]) %
                                        static_cast<std::uint64_t>(p));
    }
  }
  return LaurentSeries::normalize(p, low, std::move(sum));
}

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.p_ != y.p_) throw std::invalid_argument("series over different primes");
  const std::int64_t p = x.p_;
  if (x.is_exact_zero() || y.is_exact_zero()) return LaurentSeries::zero(p);
  if (x.is_zero() || y.is_zero()) {
    const std::int64_t mx = x.is_zero() ? *x.zero_precision_ : x.degree_;
    const std::int64_t my = y.is_zero() ? *y.zero_precision_ : y.degree_;
    return LaurentSeries::zero_mod(p, mx + my);
  }
  const std::size_t n = std::min(x.coeffs_.size(), y.coeffs_.size());
  const auto up = static_cast<std::uint64_t>(p);
  std::vector<std::uint32_t> prod(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc = (acc + std::uint64_t{x.coeffs_[i]} * y.coeffs_[k - i]) % up;
    prod[k] = static_cast<std::uint32_t>(acc);
  }
  LaurentSeries out(p);
  out.degree_ = x.degree_ + y.degree_;
  out.coeffs_ = std::move(prod);
  return out;
}

bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.p_ != y.p_) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.degree_ == y.degree_ && x.coeffs_ == y.coeffs_;
}

AbsValue val_T(const LaurentSeries& f, std::int64_t radix) {
  if (radix <= 1) throw std::invalid_argument("radix must exceed 1");
  return AbsValue(mpz_class(static_cast<long>(radix)), f.min_degree());
}

std::string to_string(const LaurentSeries& f) {
  if (f.is_exact_zero()) return "0";
  std::string out;
  if (!f.is_zero()) {
    const std::int64_t low = f.min_degree().as_integer();
    const auto& cs = f.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      const std::int64_t k = low + static_cast<std::int64_t>(i);
      out += std::to_string(cs[i]);
      if (k != 0) {
        out += kMiddleDot;
        out += "T";
        if (k != 1) out += "^" + std::to_string(k);
      }
      out += " + ";
    }
  }
  return out + "O(T^" + std::to_string(*f.absolute_precision()) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t to_int(std::string_view s) {
  s = trim(s);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in series");
  }
  return v;
}

}  // namespace

LaurentSeries parse_laurent(std::string_view text, std::int64_t p) {
  text = trim(text);
  if (text == "0") return LaurentSeries::zero(p);
  // (negated, term) pairs split at " + " and " - ".
  std::vector<std::pair<bool, std::string_view>> signed_terms;
  bool negated = false;
  if (text.starts_with("-")) {
    negated = true;
    text = trim(text.substr(1));
  }
  while (true) {
    const auto plus = text.find(" + ");
    const auto minus = text.find(" - ");
    const auto cut = std::min(plus, minus);
    if (cut == std::string_view::npos) {
      signed_terms.emplace_back(negated, trim(text));
      break;
    }
    signed_terms.emplace_back(negated, trim(text.substr(0, cut)));
    negated = cut == minus;
    text.remove_prefix(cut + 3);
  }
  if (signed_terms.back().first) throw std::invalid_argument("O(T^M) cannot be negated");
  std::vector<std::string_view> terms;
  for (const auto& [neg, term] : signed_terms) terms.push_back(term);
  const std::string_view last = terms.back();
  if (!last.starts_with("O(T^") || !last.ends_with(")")) {
    throw std::invalid_argument("series must end with O(T^M)");
  }
  const std::int64_t m = to_int(last.substr(4, last.size() - 5));
  terms.pop_back();

  std::map<std::int64_t, std::int64_t> coeffs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string_view term = terms[i];
    const auto t = term.find('T');
    std::int64_t c = 1;
    std::int64_t k = 0;
    if (t == std::string_view::npos) {
      c = to_int(term);
    } else {
      std::string_view head = term.substr(0, t);
      if (head.ends_with(kMiddleDot)) {
        head.remove_suffix(kMiddleDot.size());
      } else if (head.ends_with("*")) {
        head.remove_suffix(1);
      } else if (!trim(head).empty()) {
        throw std::invalid_argument("bad term '" + std::string(term) + "'");
      }
      if (!trim(head).empty()) c = to_int(head);
      const std::string_view tail = term.substr(t + 1);
      if (tail.empty()) {
        k = 1;
      } else if (tail.front() == '^') {
        k = to_int(tail.substr(1));
      } else {
        throw std::invalid_argument("bad term '" + std::string(term) + "'");
      }
    }
    if (signed_terms[i].first) c = -c;
    if (!coeffs.emplace(k, c).second) {
      throw std::invalid_argument("repeated degree " + std::to_string(k));
    }
  }
  return LaurentSeries::from_terms(p, coeffs, m);
}

}  // namespace valfield
