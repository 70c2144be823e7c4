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

#ifndef VALFIELD_FUNCALG_HPP
#define VALFIELD_FUNCALG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "valfield/quadext.hpp"

namespace valfield {

/// Finite model of the closed unit ball {x in L : |x|_L <= 1} at precision N.
///
/// The ball is the ring of integers Z_p[sqrt(u)]; its classes modulo p^N are
/// represented by a + b sqrt(u) with integers 0 <= a, b < p^N, so there are
/// p^(2N) representatives. Index order is b-major: index = b * p^N + a, which
/// lists the base field Z_p first and is fixed so reports are reproducible.
///
/// A function on the model is "continuous" when it is locally constant at
/// radius p^(-N), i.e. it only depends on the class of its argument mod p^N.
class BallModel {
 public:
  static std::shared_ptr<const BallModel> make(QuadContext ctx, std::int64_t precision);

  const QuadContext& context() const { return ctx_; }
  std::int64_t precision() const { return precision_; }
  /// p^N.
  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return points_.size(); }

  /// Representatives are exact integers a + b sqrt(u); they are held with
  /// working_digits() relative digits so polynomials with denominators can
  /// still be evaluated on them to precision N.
  const QuadExtElement& representative(std::size_t index) const { return points_.at(index); }
  std::int64_t working_digits() const { return working_digits_; }
  /// Upper bound on sum_j omega(x_k - x_j) over all pairs through one point.
  std::int64_t interpolation_loss() const { return interpolation_loss_; }
  std::int64_t coordinate_a(std::size_t index) const {
    return static_cast<std::int64_t>(index) % modulus_;
  }
  std::int64_t coordinate_b(std::size_t index) const {
    return static_cast<std::int64_t>(index) / modulus_;
  }
  ValRank omega_at(std::size_t index) const { return omegas_.at(index); }

  /// Index of the representative congruent to y mod p^N. Throws
  /// std::invalid_argument if y is outside the ball, PrecisionError if y is
  /// not known modulo p^N.
  std::size_t locate(const QuadExtElement& y) const;

  /// Newton table data in index order. For the pair (x_i, x_{i-k}), stored
  /// row-major at i (i - 1) / 2 + k - 1: the shift e = omega(x_i - x_{i-k})
  /// and the inverse of (x_i - x_{i-k}) / p^e modulo p^digits, as a + b sqrt(u).
  struct NewtonNodes {
    std::int64_t digits = 0;
    std::vector<std::uint8_t> shifts;
    std::vector<mpz_class> inverse_a;
    std::vector<mpz_class> inverse_b;
  };
  /// Only built for models of at most 2048 points; shared per digit count.
  std::shared_ptr<const NewtonNodes> newton_nodes(std::int64_t digits) const;
  /// Largest total shift along a path of the divided-difference table ending
  /// at a Newton coefficient.
  std::int64_t newton_loss() const;

  /// Line-oriented dump: a header line, then "index=.. a=.. b=.. omega=..".
  std::string dump() const;

 private:
  BallModel(QuadContext ctx, std::int64_t precision);

  QuadContext ctx_;
  std::int64_t precision_;
  std::int64_t modulus_;
  std::int64_t interpolation_loss_ = 0;
  std::int64_t working_digits_ = 0;
  std::vector<QuadExtElement> points_;
  std::vector<ValRank> omegas_;
  mutable std::mutex nodes_mutex_;
  mutable std::map<std::int64_t, std::shared_ptr<const NewtonNodes>> nodes_;
  mutable std::optional<std::int64_t> newton_loss_;
};

using BallMap = std::function<QuadExtElement(const QuadExtElement&)>;

/// Restriction of the Galois conjugation to the ball.
QuadExtElement tau1(const QuadExtElement& x);
/// p x if omega(x) is even, x / p if it is odd; 0 at 0.
QuadExtElement tau2(const QuadExtElement& x);

/// A function on the model, given by its value at every representative.
/// Values are stored reduced modulo p^N.
class FiniteFunction {
 public:
  FiniteFunction(std::shared_ptr<const BallModel> ball, std::vector<QuadExtElement> values);

  static FiniteFunction tabulate(std::shared_ptr<const BallModel> ball, const BallMap& f);
  static FiniteFunction constant(std::shared_ptr<const BallModel> ball, const QuadExtElement& c);

  const BallModel& ball() const { return *ball_; }
  const std::shared_ptr<const BallModel>& ball_ptr() const { return ball_; }
  const QuadExtElement& at(std::size_t index) const { return values_.at(index); }
  const std::vector<QuadExtElement>& values() const { return values_; }
  /// Value at the representative of y.
  const QuadExtElement& operator()(const QuadExtElement& y) const { return at(ball_->locate(y)); }

  friend FiniteFunction operator+(const FiniteFunction& f, const FiniteFunction& g);
  friend FiniteFunction operator*(const FiniteFunction& f, const FiniteFunction& g);
  friend bool operator==(const FiniteFunction& f, const FiniteFunction& g) {
    return f.values_ == g.values_;
  }

 private:
  std::shared_ptr<const BallModel> ball_;
  std::vector<QuadExtElement> values_;
};

/// Polynomial with coefficients in L, lowest degree first; trailing zeros
/// are trimmed.
class PolynomialL {
 public:
  PolynomialL() = default;
  explicit PolynomialL(std::vector<QuadExtElement> coeffs);

  /// Polynomial whose coefficients lie in the base field.
  static PolynomialL from_base(QuadContext ctx, const std::vector<mpq_class>& coeffs,
                               std::int64_t digits);

  const std::vector<QuadExtElement>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// True when every coefficient lies in the base field.
  bool is_f_rational() const;

 private:
  std::vector<QuadExtElement> coeffs_;
};

/// Horner evaluation reduced to absolute precision `precision`. Throws
/// PrecisionError when the result is not known that far. For integral x the
/// loop runs on scaled integers modulo a fixed power of p.
QuadExtElement eval_poly(const PolynomialL& poly, const QuadExtElement& x,
                         std::int64_t precision);

/// Fiber of omega over n among the representatives; requires 0 <= n < N.
std::vector<std::size_t> circle(const BallModel& ball, std::int64_t n);

struct MembershipReport {
  bool member = true;
  std::optional<std::size_t> witness;
  /// f(tau(x)) and g(f(x)) at the witness.
  std::optional<QuadExtElement> lhs;
  std::optional<QuadExtElement> rhs;

  std::string to_report(const BallModel& ball) const;
};

/// Checks f(tau(x)) = g(f(x)) at every representative, in index order.
MembershipReport in_CXtau(const FiniteFunction& f, const BallMap& tau, const BallMap& g);

/// Whether f is constant on every ball x + p^m O_L of the model (0 <= m <= N).
bool is_locally_constant(const FiniteFunction& f, std::int64_t m);

struct Separator {
  FiniteFunction function;
  /// h is constant on balls of radius p^(-radius).
  std::int64_t radius = 0;
};

/// h = a on the clopen ball {y : omega(y - x) >= m} and b elsewhere, with m
/// the least radius excluding every y in ys. Throws std::invalid_argument if
/// x is among ys.
Separator urysohn_separator(std::shared_ptr<const BallModel> ball, std::size_t x,
                            const std::vector<std::size_t>& ys, const QuadExtElement& a,
                            const QuadExtElement& b);

/// Newton divided-difference interpolant through every representative:
/// eval_poly(P, x, N) = f(x) at each x, with degree < p^(2N). The canonical
/// lifts of the values are interpolated exactly modulo a power of p large
/// enough for newton_loss(); coefficients are returned modulo p^N.
PolynomialL interpolate(const FiniteFunction& f);

/// True iff for every pair of distinct representatives some function in
/// `fns` takes different values.
bool separates_points(const std::vector<FiniteFunction>& fns, const BallModel& ball);

}  // namespace valfield

#endif  // VALFIELD_FUNCALG_HPP
