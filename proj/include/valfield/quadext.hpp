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

#ifndef VALFIELD_QUADEXT_HPP
#define VALFIELD_QUADEXT_HPP

#include <cstdint>
#include <string>

#include "valfield/padic.hpp"
#include "valfield/valcore.hpp"

namespace valfield {

/// The field L = Q_p(sqrt(u)) for an odd prime p and a unit u that is not a
/// square in Q_p (the unramified quadratic extension).
class QuadContext {
 public:
  /// Validates (p, u); the verdict is cached per pair. Throws
  /// std::invalid_argument for even or composite p, for p | u (ramified,
  /// unsupported) and for u a square in Q_p.
  static QuadContext make(std::int64_t p, std::int64_t u);

  std::int64_t prime() const { return p_; }
  std::int64_t u() const { return u_; }

  friend bool operator==(const QuadContext&, const QuadContext&) = default;

 private:
  QuadContext(std::int64_t p, std::int64_t u) : p_(p), u_(u) {}
  std::int64_t p_;
  std::int64_t u_;
};

/// a + b sqrt(u) with p-adic a and b.
class QuadExtElement {
 public:
  QuadExtElement(QuadContext ctx, PadicNumber a, PadicNumber b);

  static QuadExtElement zero(QuadContext ctx);
  static QuadExtElement from_rational(QuadContext ctx, const mpq_class& a, const mpq_class& b,
                                      std::int64_t n_digits);
  /// sqrt(u) itself.
  static QuadExtElement sqrt_u(QuadContext ctx, std::int64_t n_digits);

  const QuadContext& context() const { return ctx_; }
  const PadicNumber& a() const { return a_; }
  const PadicNumber& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base_field() const { return b_.is_zero(); }

  /// min of the components' absolute precisions; nullopt if both are exact.
  std::optional<std::int64_t> absolute_precision() const;

  /// a^2 - u b^2 = x g(x), an element of Q_p.
  PadicNumber norm() const;
  QuadExtElement inverse() const;
  QuadExtElement scaled(const mpq_class& c) const;
  /// Componentwise reduction modulo p^M.
  QuadExtElement reduced_to(std::int64_t abs_precision) const;

  QuadExtElement operator-() const { return {ctx_, -a_, -b_}; }
  friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y) {
    return x * y.inverse();
  }
  friend bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
    return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  QuadContext ctx_;
  PadicNumber a_;
  PadicNumber b_;
};

/// Galois conjugation: a + b sqrt(u) -> a - b sqrt(u).
QuadExtElement conj_g(const QuadExtElement& x);

/// omega(x) = nu_p(x g(x)) / 2; +infinity at zero. Throws PrecisionError
/// when the norm of a nonzero x cancels below its known precision.
ValRank omega(const QuadExtElement& x);

/// |x|_L = p^(-omega(x)).
AbsValue abs_L(const QuadExtElement& x);

/// "a + b*sqrt(u)" with compact p-adic components.
std::string to_string(const QuadExtElement& x);

}  // namespace valfield

#endif  // VALFIELD_QUADEXT_HPP
