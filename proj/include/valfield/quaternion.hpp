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

#ifndef VALFIELD_QUATERNION_HPP
#define VALFIELD_QUATERNION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "valfield/errors.hpp"
#include "valfield/padic.hpp"
#include "valfield/valcore.hpp"

namespace valfield {

/// Structure constants of (s, t / F): i^2 = s, j^2 = t, k = ij = -ji, so
/// k^2 = -st. For p-adic coefficients, `digits` is the relative precision
/// given to literals built inside the algebra.
struct AlgebraParams {
  mpq_class s;
  mpq_class t;
  std::int64_t p = 0;
  std::int64_t digits = 16;

  friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) {
    return x.s == y.s && x.t == y.t && x.p == y.p;
  }
};

namespace detail {

inline bool coeff_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const PadicNumber& x) { return x.is_zero(); }
inline mpq_class coeff_scale(const mpq_class& x, const mpq_class& c) { return x * c; }
inline PadicNumber coeff_scale(const PadicNumber& x, const mpq_class& c) { return x.scaled(c); }
inline std::string coeff_string(const mpq_class& x) { return x.get_str(); }
inline std::string coeff_string(const PadicNumber& x) { return to_compact_string(x); }

template <class F>
F coeff_from_rational(const mpq_class& c, const AlgebraParams& params) {
  if constexpr (std::is_same_v<F, mpq_class>) {
    return c;
  } else {
    return PadicNumber::from_rational(c, params.p, params.digits);
  }
}

}  // namespace detail

/// a + b i + c j + d k in the algebra described by `params`.
template <class F>
class Quaternion {
 public:
  Quaternion(std::shared_ptr<const AlgebraParams> params, F a, F b, F c, F d)
      : params_(std::move(params)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        d_(std::move(d)) {}

  const AlgebraParams& params() const { return *params_; }
  const std::shared_ptr<const AlgebraParams>& params_ptr() const { return params_; }
  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const F& c() const { return c_; }
  const F& d() const { return d_; }

  bool is_zero() const {
    return detail::coeff_is_zero(a_) && detail::coeff_is_zero(b_) &&
           detail::coeff_is_zero(c_) && detail::coeff_is_zero(d_);
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return *x.params_ == *y.params_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ &&
           x.d_ == y.d_;
  }

 private:
  std::shared_ptr<const AlgebraParams> params_;
  F a_, b_, c_, d_;
};

/// Factory for elements of one algebra.
template <class F>
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(mpq_class s, mpq_class t, std::int64_t p = 0, std::int64_t digits = 16)
      : params_(std::make_shared<const AlgebraParams>(
            AlgebraParams{std::move(s), std::move(t), p, digits})) {
    if (sgn(params_->s) == 0 || sgn(params_->t) == 0) {
      throw std::invalid_argument("structure constants must be nonzero");
    }
    if constexpr (std::is_same_v<F, PadicNumber>) {
      if (!is_prime(p) || p == 2) {
        throw std::invalid_argument("p-adic quaternion algebras need an odd prime");
      }
    }
  }

  const AlgebraParams& params() const { return *params_; }

  Quaternion<F> make(F a, F b, F c, F d) const {
    return Quaternion<F>(params_, std::move(a), std::move(b), std::move(c), std::move(d));
  }
  Quaternion<F> rational(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                         const mpq_class& d) const {
    return make(scalar(a), scalar(b), scalar(c), scalar(d));
  }
  F scalar(const mpq_class& x) const { return detail::coeff_from_rational<F>(x, *params_); }

  Quaternion<F> zero() const { return rational(0, 0, 0, 0); }
  Quaternion<F> one() const { return rational(1, 0, 0, 0); }
  Quaternion<F> i() const { return rational(0, 1, 0, 0); }
  Quaternion<F> j() const { return rational(0, 0, 1, 0); }
  Quaternion<F> k() const { return rational(0, 0, 0, 1); }

 private:
  std::shared_ptr<const AlgebraParams> params_;
};

namespace detail {

template <class F>
void require_same_algebra(const Quaternion<F>& x, const Quaternion<F>& y) {
  if (!(x.params() == y.params())) {
    throw std::invalid_argument("quaternions from different algebras");
  }
}

}  // namespace detail

template <class F>
Quaternion<F> qadd(const Quaternion<F>& x, const Quaternion<F>& y) {
  detail::require_same_algebra(x, y);
  return Quaternion<F>(x.params_ptr(), x.a() + y.a(), x.b() + y.b(), x.c() + y.c(),
                       x.d() + y.d());
}

template <class F>
Quaternion<F> qneg(const Quaternion<F>& x) {
  return Quaternion<F>(x.params_ptr(), -x.a(), -x.b(), -x.c(), -x.d());
}

template <class F>
Quaternion<F> qsub(const Quaternion<F>& x, const Quaternion<F>& y) {
  return qadd(x, qneg(y));
}

/// Scalar multiple c q for an exact rational c.
template <class F>
Quaternion<F> qscale(const Quaternion<F>& x, const mpq_class& c) {
  using detail::coeff_scale;
  return Quaternion<F>(x.params_ptr(), coeff_scale(x.a(), c), coeff_scale(x.b(), c),
                       coeff_scale(x.c(), c), coeff_scale(x.d(), c));
}

/// Product from the basis table i^2 = s, j^2 = t, ij = -ji = k, k^2 = -st,
/// ik = s j, ki = -s j, jk = -t i, kj = t i.
template <class F>
Quaternion<F> qmul(const Quaternion<F>& x, const Quaternion<F>& y) {
  detail::require_same_algebra(x, y);
  using detail::coeff_scale;
  const mpq_class& s = x.params().s;
  const mpq_class& t = x.params().t;
  const mpq_class st = s * t;
  F a = x.a() * y.a() + coeff_scale(x.b() * y.b(), s) + coeff_scale(x.c() * y.c(), t) -
        coeff_scale(x.d() * y.d(), st);
  F b = x.a() * y.b() + x.b() * y.a() + coeff_scale(x.d() * y.c() - x.c() * y.d(), t);
  F c = x.a() * y.c() + x.c() * y.a() + coeff_scale(x.b() * y.d() - x.d() * y.b(), s);
  F d = x.a() * y.d() + x.d() * y.a() + x.b() * y.c() - x.c() * y.b();
  return Quaternion<F>(x.params_ptr(), std::move(a), std::move(b), std::move(c), std::move(d));
}

/// a - b i - c j - d k.
template <class F>
Quaternion<F> qconj(const Quaternion<F>& x) {
  return Quaternion<F>(x.params_ptr(), x.a(), -x.b(), -x.c(), -x.d());
}

/// Reduced norm a^2 - s b^2 - t c^2 + st d^2 (= conj(q) q = q conj(q)).
template <class F>
F qnorm(const Quaternion<F>& x) {
  using detail::coeff_scale;
  const mpq_class& s = x.params().s;
  const mpq_class& t = x.params().t;
  return x.a() * x.a() - coeff_scale(x.b() * x.b(), s) - coeff_scale(x.c() * x.c(), t) +
         coeff_scale(x.d() * x.d(), s * t);
}

template <class F>
std::string to_string(const Quaternion<F>& x);

/// conj(q) / N(q). Throws std::domain_error for q = 0 and ZeroDivisorError
/// (carrying q) for a nonzero q of norm zero.
template <class F>
Quaternion<F> qinv(const Quaternion<F>& x) {
  if (x.is_zero()) throw std::domain_error("zero has no inverse");
  const F n = qnorm(x);
  if (detail::coeff_is_zero(n)) {
    throw ZeroDivisorError("zero divisor: " + to_string(x) + " has norm 0", to_string(x));
  }
  const Quaternion<F> c = qconj(x);
  if constexpr (std::is_same_v<F, mpq_class>) {
    return qscale(c, 1 / n);
  } else {
    const F n_inv = n.inverse();
    return Quaternion<F>(x.params_ptr(), c.a() * n_inv, c.b() * n_inv, c.c() * n_inv,
                         c.d() * n_inv);
  }
}

/// |q| = p^(-nu_p(N(q)) / 2) for p-adic coefficients.
AbsValue qabs(const Quaternion<PadicNumber>& q);
/// The same for exact-rational coefficients viewed in Q_p.
AbsValue qabs(const Quaternion<mpq_class>& q, std::int64_t p);

/// Converts exact-rational coefficients to p-adic ones at `digits`.
Quaternion<PadicNumber> to_padic(const Quaternion<mpq_class>& q, std::int64_t p,
                                 std::int64_t digits);

/// "a + b i + c j + d k", dropping zero terms; "-i" for -1 i, "0" at zero.
template <class F>
std::string to_string(const Quaternion<F>& x) {
  std::string out;
  const auto term = [&out](const F& coeff, const char* unit) {
    if (detail::coeff_is_zero(coeff)) return;
    std::string c = detail::coeff_string(coeff);
    bool negative = false;
    if constexpr (std::is_same_v<F, mpq_class>) {
      negative = sgn(coeff) < 0;
      if (negative) c = mpq_class(-coeff).get_str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (*unit == '\0') {
      out += c;
    } else if (c == "1") {
      out += unit;
    } else {
      out += c + " " + unit;
    }
  };
  term(x.a(), "");
  term(x.b(), "i");
  term(x.c(), "j");
  term(x.d(), "k");
  return out.empty() ? "0" : out;
}

enum class DivisionVerdictKind { kDivisionCriterion, kSplitWitness, kInconclusive };

/// Outcome of `division_evidence`.
struct DivisionVerdict {
  DivisionVerdictKind kind = DivisionVerdictKind::kInconclusive;
  std::string reason;
  /// Norm-zero witness; exact when `exact_witness` is set, otherwise a
  /// Hensel-lifted p-adic one whose norm vanishes at tracked precision.
  std::optional<Quaternion<PadicNumber>> witness;
  std::optional<Quaternion<mpq_class>> exact_witness;
  std::int64_t trials_used = 0;
  std::vector<std::string> transcript;

  /// "division (criterion)", "split (witness)" or "inconclusive".
  std::string label() const;
  /// Line-oriented key=value report, then a blank line and the transcript.
  std::string to_report() const;
};

/// Evidence on whether (s, t / Q_p) is a division algebra. Reports the
/// sufficient criterion (one constant p times a unit square, the other a
/// non-square unit), otherwise searches small integer tuples for a nonzero
/// norm-zero element, solving for one coordinate with a p-adic square root.
/// Never throws for a negative outcome; budget exhaustion is "inconclusive".
DivisionVerdict division_evidence(const mpq_class& s, const mpq_class& t, std::int64_t p,
                                  std::int64_t trials, std::int64_t digits = 16);

}  // namespace valfield

#endif  // VALFIELD_QUATERNION_HPP
