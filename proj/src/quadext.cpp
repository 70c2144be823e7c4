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

#include "valfield/quadext.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "valfield/errors.hpp"

namespace valfield {

QuadContext QuadContext::make(std::int64_t p, std::int64_t u) {
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::string> verdicts;

  std::string verdict;
  {
    std::lock_guard lock(mutex);
    if (auto it = verdicts.find({p, u}); it != verdicts.end()) {
      verdict = it->second;
    } else {
      if (!is_prime(p) || p == 2) {
        verdict = "p = " + std::to_string(p) + " must be an odd prime";
      } else if (u % p == 0) {
        verdict = "u = " + std::to_string(u) +
                  " is divisible by p; ramified extensions are not supported";
      } else {
        const auto root = sqrt_exists(PadicNumber::from_rational(u, 1, p, 1), 1);
        if (root.exists) {
          verdict = "u = " + std::to_string(u) + " is a square in Q_" + std::to_string(p);
        }
      }
      verdicts.emplace(std::pair{p, u}, verdict);
    }
  }
  if (!verdict.empty()) throw std::invalid_argument(verdict);
  return QuadContext(p, u);
}

QuadExtElement::QuadExtElement(QuadContext ctx, PadicNumber a, PadicNumber b)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() != ctx_.prime() || b_.prime() != ctx_.prime()) {
    throw std::invalid_argument("component prime differs from the extension's prime");
  }
}

QuadExtElement QuadExtElement::zero(QuadContext ctx) {
  return {ctx, PadicNumber::zero(ctx.prime()), PadicNumber::zero(ctx.prime())};
}

QuadExtElement QuadExtElement::from_rational(QuadContext ctx, const mpq_class& a,
                                             const mpq_class& b, std::int64_t n_digits) {
  return {ctx, PadicNumber::from_rational(a, ctx.prime(), n_digits),
          PadicNumber::from_rational(b, ctx.prime(), n_digits)};
}

QuadExtElement QuadExtElement::sqrt_u(QuadContext ctx, std::int64_t n_digits) {
  return from_rational(ctx, 0, 1, n_digits);
}

std::optional<std::int64_t> QuadExtElement::absolute_precision() const {
  const auto pa = a_.absolute_precision();
  const auto pb = b_.absolute_precision();
  if (!pa) return pb;
  if (!pb) return pa;
  return std::min(*pa, *pb);
}

PadicNumber QuadExtElement::norm() const {
  return a_ * a_ - (b_ * b_).scaled(ctx_.u());
}

QuadExtElement QuadExtElement::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  const PadicNumber n = norm();
  if (n.is_zero()) {
    throw PrecisionError("norm " + to_compact_string(n) + " of " + to_string(*this) +
                         " is not known to enough digits to invert");
  }
  const PadicNumber n_inv = n.inverse();
  return {ctx_, a_ * n_inv, -(b_ * n_inv)};
}

QuadExtElement QuadExtElement::scaled(const mpq_class& c) const {
  return {ctx_, a_.scaled(c), b_.scaled(c)};
}

QuadExtElement QuadExtElement::reduced_to(std::int64_t abs_precision) const {
  return {ctx_, a_.reduced_to(abs_precision), b_.reduced_to(abs_precision)};
}

namespace {

void require_same(const QuadExtElement& x, const QuadExtElement& y) {
  if (!(x.context() == y.context())) {
    throw std::invalid_argument("elements of different extensions");
  }
}

}  // namespace

QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) {
  require_same(x, y);
  return {x.ctx_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) {
  require_same(x, y);
  return {x.ctx_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
  require_same(x, y);
  // (a + b r)(c + d r) = (ac + u bd) + (ad + bc) r with r^2 = u
  PadicNumber a = x.a_ * y.a_ + (x.b_ * y.b_).scaled(x.ctx_.u());
  PadicNumber b = x.a_ * y.b_ + x.b_ * y.a_;
  return {x.ctx_, std::move(a), std::move(b)};
}

QuadExtElement conj_g(const QuadExtElement& x) { return {x.context(), x.a(), -x.b()}; }

ValRank omega(const QuadExtElement& x) {
  if (x.is_zero()) return ValRank::infinity();
  const PadicNumber n = x.norm();
  if (n.is_zero()) {
    throw PrecisionError("leading digit of a^2 - u b^2 undetermined for " + to_string(x));
  }
  return nu(n).halved();
}

AbsValue abs_L(const QuadExtElement& x) {
  return AbsValue(mpz_class(static_cast<long>(x.context().prime())), omega(x));
}

std::string to_string(const QuadExtElement& x) {
  return to_compact_string(x.a()) + " + " + to_compact_string(x.b()) + "*sqrt(" +
         std::to_string(x.context().u()) + ")";
}

}  // namespace valfield
