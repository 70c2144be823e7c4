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

#include "valfield/funcalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace valfield {
namespace {

constexpr std::size_t kMaxModelSize = std::size_t{1} << 24;
constexpr std::size_t kCachedNodeLimit = 2048;

std::int64_t int_valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) return std::numeric_limits<std::int64_t>::max();
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// a + b sqrt(u) with integer components, used modulo a power of p.
struct IntPair {
  mpz_class a;
  mpz_class b;
};

// Arithmetic in Z[sqrt(u)] / p^K with preallocated scratch space.
class PairRing {
 public:
  PairRing(std::int64_t u, const mpz_class& modulus) : u_(u), m_(modulus) {}

  const mpz_class& modulus() const { return m_; }

  // out = x * (ya + yb sqrt(u)); out may alias x.
  void mul(IntPair& out, const IntPair& x, const mpz_class& ya, const mpz_class& yb) {
    mpz_mul(t1_.get_mpz_t(), x.a.get_mpz_t(), ya.get_mpz_t());
    mpz_mul(t2_.get_mpz_t(), x.b.get_mpz_t(), yb.get_mpz_t());
    mpz_mul_si(t2_.get_mpz_t(), t2_.get_mpz_t(), u_);
    mpz_add(t1_.get_mpz_t(), t1_.get_mpz_t(), t2_.get_mpz_t());
    mpz_mul(t2_.get_mpz_t(), x.a.get_mpz_t(), yb.get_mpz_t());
    mpz_addmul(t2_.get_mpz_t(), x.b.get_mpz_t(), ya.get_mpz_t());
    mpz_mod(out.a.get_mpz_t(), t1_.get_mpz_t(), m_.get_mpz_t());
    mpz_mod(out.b.get_mpz_t(), t2_.get_mpz_t(), m_.get_mpz_t());
  }

  // out = c - (xa + xb sqrt(u)) * y for small integers xa, xb; out may alias c or y.
  void sub_small_mul(IntPair& out, const IntPair& c, std::int64_t xa, std::int64_t xb,
                     const IntPair& y) {
    mpz_mul_si(t1_.get_mpz_t(), y.a.get_mpz_t(), xa);
    mpz_mul_si(t2_.get_mpz_t(), y.b.get_mpz_t(), xb * u_);
    mpz_add(t1_.get_mpz_t(), t1_.get_mpz_t(), t2_.get_mpz_t());
    mpz_mul_si(t2_.get_mpz_t(), y.a.get_mpz_t(), xb);
    mpz_mul_si(t3_.get_mpz_t(), y.b.get_mpz_t(), xa);
    mpz_add(t2_.get_mpz_t(), t2_.get_mpz_t(), t3_.get_mpz_t());
    mpz_sub(t1_.get_mpz_t(), c.a.get_mpz_t(), t1_.get_mpz_t());
    mpz_sub(t2_.get_mpz_t(), c.b.get_mpz_t(), t2_.get_mpz_t());
    mpz_mod(out.a.get_mpz_t(), t1_.get_mpz_t(), m_.get_mpz_t());
    mpz_mod(out.b.get_mpz_t(), t2_.get_mpz_t(), m_.get_mpz_t());
  }

 private:
  std::int64_t u_;
  mpz_class m_;
  mpz_class t1_, t2_, t3_;
};

// x * p^shift reduced into [0, m); requires valuation(x) + shift >= 0.
mpz_class scaled_lift(const PadicNumber& x, std::int64_t shift, const mpz_class& m) {
  if (x.is_zero()) return 0;
  const std::int64_t e = x.valuation().as_integer() + shift;
  mpz_class out = x.unit() * prime_power(x.prime(), e);
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
  return out;
}

// acc += x * p^shift without reduction; requires valuation(x) + shift >= 0.
void add_scaled(mpz_class& acc, const PadicNumber& x, std::int64_t shift) {
  if (x.is_zero()) return;
  const std::int64_t e = x.valuation().as_integer() + shift;
  mpz_addmul(acc.get_mpz_t(), x.unit().get_mpz_t(), prime_power(x.prime(), e).get_mpz_t());
}

// r / p^shift known modulo p^precision, where r is known modulo p^(shift + precision).
PadicNumber unscale(const mpz_class& r, std::int64_t p, std::int64_t shift,
                    std::int64_t precision) {
  mpz_class low;
  mpz_mod(low.get_mpz_t(), r.get_mpz_t(), prime_power(p, shift + precision).get_mpz_t());
  if (sgn(low) == 0) return PadicNumber::zero_mod(p, precision);
  mpz_class unit;
  const auto v = static_cast<std::int64_t>(
      mpz_remove(unit.get_mpz_t(), low.get_mpz_t(), mpz_class(p).get_mpz_t()));
  return PadicNumber::from_rational(low, prime_power(p, shift), p, shift + precision - v);
}

std::int64_t min_valuation(const QuadExtElement& x) {
  std::int64_t out = std::numeric_limits<std::int64_t>::max();
  if (!x.a().is_zero()) out = std::min(out, x.a().valuation().as_integer());
  if (!x.b().is_zero()) out = std::min(out, x.b().valuation().as_integer());
  return out;
}

void require_same_ball(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.ball_ptr() != g.ball_ptr()) throw std::invalid_argument("functions on different models");
}

}  // namespace

std::shared_ptr<const BallModel> BallModel::make(QuadContext ctx, std::int64_t precision) {
  return std::shared_ptr<const BallModel>(new BallModel(ctx, precision));
}

BallModel::BallModel(QuadContext ctx, std::int64_t precision)
    : ctx_(ctx), precision_(precision), modulus_(1) {
  if (precision < 1) throw std::invalid_argument("model precision must be at least 1");
  const std::int64_t p = ctx.prime();
  for (std::int64_t i = 0; i < precision; ++i) {
    if (modulus_ > static_cast<std::int64_t>(kMaxModelSize) / p) {
      throw std::invalid_argument("model too large");
    }
    modulus_ *= p;
  }
  const auto count = static_cast<std::size_t>(modulus_) * static_cast<std::size_t>(modulus_);
  if (count > kMaxModelSize) throw std::invalid_argument("model too large");
  // sum over m = 1..N-1 of (p^(2(N-m)) - 1): the most any point's
  // differences to all others can contribute to a divided difference.
  interpolation_loss_ = 0;
  for (std::int64_t m = 1; m < precision; ++m) {
    std::int64_t members = 1;
    for (std::int64_t i = 0; i < 2 * (precision - m); ++i) members *= p;
    interpolation_loss_ += members - 1;
  }
  working_digits_ = precision + interpolation_loss_ + 16;
  points_.reserve(count);
  omegas_.reserve(count);
  for (std::int64_t b = 0; b < modulus_; ++b) {
    for (std::int64_t a = 0; a < modulus_; ++a) {
      points_.push_back(QuadExtElement::from_rational(ctx, a, b, working_digits_));
      const std::int64_t w = std::min(int_valuation(a, p), int_valuation(b, p));
      omegas_.push_back(a == 0 && b == 0 ? ValRank::infinity() : ValRank::integer(w));
    }
  }
}

std::size_t BallModel::locate(const QuadExtElement& y) const {
  if (!(y.context() == ctx_)) throw std::invalid_argument("element of a different extension");
  if (!y.is_zero() && omega(y) < ValRank{}) {
    throw std::invalid_argument(to_string(y) + " lies outside the unit ball");
  }
  const mpz_class a = y.a().residue(precision_);
  const mpz_class b = y.b().residue(precision_);
  return static_cast<std::size_t>(b.get_si() * modulus_ + a.get_si());
}

namespace {

// For representatives x_i != x_j: returns e = omega(x_i - x_j) and the
// inverse of (x_i - x_j) / p^e modulo p^digits.
class PairInverter {
 public:
  PairInverter(const BallModel& ball, std::int64_t digits)
      : ball_(ball), m_(prime_power(ball.context().prime(), digits)) {}

  std::int64_t operator()(std::size_t i, std::size_t j, mpz_class& inv_a, mpz_class& inv_b) const {
    const std::int64_t p = ball_.context().prime();
    std::int64_t da = ball_.coordinate_a(i) - ball_.coordinate_a(j);
    std::int64_t db = ball_.coordinate_b(i) - ball_.coordinate_b(j);
    const std::int64_t e = std::min(int_valuation(da, p), int_valuation(db, p));
    for (std::int64_t r = 0; r < e; ++r) {
      da /= p;
      db /= p;
    }
    // 1 / (da + db sqrt(u)) = (da - db sqrt(u)) / (da^2 - u db^2).
    mpz_class norm = mpz_class(da) * da - mpz_class(ball_.context().u()) * db * db;
    mpz_invert(norm.get_mpz_t(), norm.get_mpz_t(), m_.get_mpz_t());
    inv_a = norm * da;
    inv_b = -norm * db;
    mpz_mod(inv_a.get_mpz_t(), inv_a.get_mpz_t(), m_.get_mpz_t());
    mpz_mod(inv_b.get_mpz_t(), inv_b.get_mpz_t(), m_.get_mpz_t());
    return e;
  }

 private:
  const BallModel& ball_;
  mpz_class m_;
};

}  // namespace

std::shared_ptr<const BallModel::NewtonNodes> BallModel::newton_nodes(std::int64_t digits) const {
  const std::size_t n = size();
  if (n > kCachedNodeLimit) throw std::invalid_argument("model too large to cache Newton nodes");
  std::lock_guard lock(nodes_mutex_);
  if (auto it = nodes_.find(digits); it != nodes_.end()) return it->second;
  auto nodes = std::make_shared<NewtonNodes>();
  nodes->digits = digits;
  const std::size_t pairs = n * (n - 1) / 2;
  nodes->shifts.reserve(pairs);
  nodes->inverse_a.resize(pairs);
  nodes->inverse_b.resize(pairs);
  const PairInverter inv(*this, digits);
  std::size_t at = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 1; k <= i; ++k, ++at) {
      nodes->shifts.push_back(static_cast<std::uint8_t>(
          inv(i, i - k, nodes->inverse_a[at], nodes->inverse_b[at])));
    }
  }
  nodes_.emplace(digits, nodes);
  return nodes;
}

std::int64_t BallModel::newton_loss() const {
  std::lock_guard lock(nodes_mutex_);
  if (newton_loss_) return *newton_loss_;
  const std::size_t n = size();
  const std::int64_t p = ctx_.prime();
  // loss[i] after level k: worst total shift into f[x_{i-k}, ..., x_i].
  std::vector<std::int64_t> loss(n, 0);
  std::int64_t worst = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      const std::int64_t da = coordinate_a(i) - coordinate_a(i - k);
      const std::int64_t db = coordinate_b(i) - coordinate_b(i - k);
      loss[i] = std::min(int_valuation(da, p), int_valuation(db, p)) +
                std::max(loss[i], loss[i - 1]);
    }
    worst = std::max(worst, loss[k]);
  }
  newton_loss_ = worst;
  return worst;
}

std::string BallModel::dump() const {
  std::ostringstream os;
  os << "model p=" << ctx_.prime() << " u=" << ctx_.u() << " N=" << precision_
     << " size=" << size() << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    os << "index=" << i << " a=" << coordinate_a(i) << " b=" << coordinate_b(i)
       << " omega=" << omegas_[i].to_string() << '\n';
  }
  return os.str();
}

QuadExtElement tau1(const QuadExtElement& x) {
  if (!x.is_zero() && omega(x) < ValRank{}) {
    throw std::invalid_argument("tau1 is defined on the unit ball only");
  }
  return conj_g(x);
}

QuadExtElement tau2(const QuadExtElement& x) {
  if (x.is_zero()) return x;
  const ValRank w = omega(x);
  if (w < ValRank{}) throw std::invalid_argument("tau2 is defined on the unit ball only");
  const std::int64_t p = x.context().prime();
  return w.as_integer() % 2 == 0 ? x.scaled(p) : x.scaled(mpq_class(1, p));
}

FiniteFunction::FiniteFunction(std::shared_ptr<const BallModel> ball,
                               std::vector<QuadExtElement> values)
    : ball_(std::move(ball)), values_(std::move(values)) {
  if (values_.size() != ball_->size()) {
    throw std::invalid_argument("function needs one value per representative");
  }
  for (auto& v : values_) v = v.reduced_to(ball_->precision());
}

FiniteFunction FiniteFunction::tabulate(std::shared_ptr<const BallModel> ball, const BallMap& f) {
  std::vector<QuadExtElement> values;
  values.reserve(ball->size());
  for (std::size_t i = 0; i < ball->size(); ++i) values.push_back(f(ball->representative(i)));
  return FiniteFunction(std::move(ball), std::move(values));
}

FiniteFunction FiniteFunction::constant(std::shared_ptr<const BallModel> ball,
                                        const QuadExtElement& c) {
  std::vector<QuadExtElement> values(ball->size(), c);
  return FiniteFunction(std::move(ball), std::move(values));
}

FiniteFunction operator+(const FiniteFunction& f, const FiniteFunction& g) {
  require_same_ball(f, g);
  std::vector<QuadExtElement> values;
  values.reserve(f.values_.size());
  for (std::size_t i = 0; i < f.values_.size(); ++i) values.push_back(f.values_[i] + g.values_[i]);
  return FiniteFunction(f.ball_, std::move(values));
}

FiniteFunction operator*(const FiniteFunction& f, const FiniteFunction& g) {
  require_same_ball(f, g);
  std::vector<QuadExtElement> values;
  values.reserve(f.values_.size());
  for (std::size_t i = 0; i < f.values_.size(); ++i) values.push_back(f.values_[i] * g.values_[i]);
  return FiniteFunction(f.ball_, std::move(values));
}

PolynomialL::PolynomialL(std::vector<QuadExtElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolynomialL PolynomialL::from_base(QuadContext ctx, const std::vector<mpq_class>& coeffs,
                                   std::int64_t digits) {
  std::vector<QuadExtElement> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(QuadExtElement::from_rational(ctx, c, 0, digits));
  return PolynomialL(std::move(out));
}

bool PolynomialL::is_f_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const QuadExtElement& c) { return c.in_base_field(); });
}

QuadExtElement eval_poly(const PolynomialL& poly, const QuadExtElement& x,
                         std::int64_t precision) {
  const auto& cs = poly.coefficients();
  const QuadContext& ctx = x.context();
  const std::int64_t p = ctx.prime();
  // Integral x: run Horner on integers scaled by p^shift modulo p^(shift + precision).
  std::int64_t shift = 0;
  std::optional<std::int64_t> known;
  for (const auto& c : cs) {
    if (!(c.context() == ctx)) throw std::invalid_argument("coefficient of a different extension");
    if (!c.is_zero()) shift = std::max(shift, -min_valuation(c));
    if (const auto m = c.absolute_precision()) known = known ? std::min(*known, *m) : *m;
  }
  const bool integral = x.is_zero() || min_valuation(x) >= 0;
  const auto x_known = x.absolute_precision();
  if (!cs.empty() && integral && (!known || *known >= precision) &&
      (!x_known || *x_known - shift >= precision)) {
    PairRing ring(ctx.u(), prime_power(p, shift + precision));
    const mpz_class& m = ring.modulus();
    const IntPair xs{scaled_lift(x.a(), 0, m), scaled_lift(x.b(), 0, m)};
    IntPair acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      ring.mul(acc, acc, xs.a, xs.b);
      add_scaled(acc.a, it->a(), shift);
      add_scaled(acc.b, it->b(), shift);
    }
    return QuadExtElement(ctx, unscale(acc.a, p, shift, precision),
                          unscale(acc.b, p, shift, precision));
  }
  QuadExtElement acc = QuadExtElement::zero(ctx);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
  return acc.reduced_to(precision);
}

std::vector<std::size_t> circle(const BallModel& ball, std::int64_t n) {
  if (n < 0 || n >= ball.precision()) {
    throw std::invalid_argument("omega = " + std::to_string(n) +
                                " is not determined at model precision " +
                                std::to_string(ball.precision()));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.omega_at(i) == ValRank::integer(n)) out.push_back(i);
  }
  return out;
}

std::string MembershipReport::to_report(const BallModel& ball) const {
  std::ostringstream os;
  os << "member=" << (member ? "true" : "false") << '\n';
  if (witness) {
    os << "witness_index=" << *witness << '\n';
    os << "witness_a=" << ball.coordinate_a(*witness) << '\n';
    os << "witness_b=" << ball.coordinate_b(*witness) << '\n';
    os << "f(tau(x))=" << to_string(*lhs) << '\n';
    os << "g(f(x))=" << to_string(*rhs) << '\n';
  }
  return os.str();
}

MembershipReport in_CXtau(const FiniteFunction& f, const BallMap& tau, const BallMap& g) {
  const BallModel& ball = f.ball();
  MembershipReport out;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const QuadExtElement& lhs = f(tau(ball.representative(i)));
    QuadExtElement rhs = g(f.at(i)).reduced_to(ball.precision());
    if (!(lhs == rhs)) {
      out.member = false;
      out.witness = i;
      out.lhs = lhs;
      out.rhs = std::move(rhs);
      return out;
    }
  }
  return out;
}

bool is_locally_constant(const FiniteFunction& f, std::int64_t m) {
  const BallModel& ball = f.ball();
  if (m < 0 || m > ball.precision()) throw std::invalid_argument("radius outside [0, N]");
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < m; ++i) q *= ball.context().prime();
  // First representative of each class mod p^m is the one with a, b < p^m.
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const std::int64_t a = ball.coordinate_a(i) % q;
    const std::int64_t b = ball.coordinate_b(i) % q;
    const auto anchor = static_cast<std::size_t>(b * ball.modulus() + a);
    if (!(f.at(i) == f.at(anchor))) return false;
  }
  return true;
}

Separator urysohn_separator(std::shared_ptr<const BallModel> ball, std::size_t x,
                            const std::vector<std::size_t>& ys, const QuadExtElement& a,
                            const QuadExtElement& b) {
  if (std::find(ys.begin(), ys.end(), x) != ys.end()) {
    throw std::invalid_argument("the point to isolate is among the points to exclude");
  }
  const QuadExtElement& center = ball->representative(x);
  std::int64_t radius = 0;
  for (const std::size_t y : ys) {
    const ValRank w = omega(ball->representative(y) - center);
    radius = std::max(radius, w.as_integer() + 1);
  }
  std::vector<QuadExtElement> values;
  values.reserve(ball->size());
  for (std::size_t i = 0; i < ball->size(); ++i) {
    const ValRank w = omega(ball->representative(i) - center);
    values.push_back(w >= ValRank::integer(radius) ? a : b);
  }
  return Separator{FiniteFunction(std::move(ball), std::move(values)), radius};
}

PolynomialL interpolate(const FiniteFunction& f) {
  const BallModel& ball = f.ball();
  const QuadContext& ctx = ball.context();
  const std::int64_t p = ctx.prime();
  const std::int64_t target = ball.precision();
  const std::size_t n = ball.size();

  // Divided differences of the canonical lifts times p^shift are integral;
  // the Newton table then loses at most newton_loss() digits.
  std::int64_t shift = ball.interpolation_loss();
  for (const auto& v : f.values()) {
    if (!v.is_zero()) shift = std::max(shift, ball.interpolation_loss() - min_valuation(v));
  }
  const std::int64_t digits = shift + target + ball.newton_loss();
  PairRing ring(ctx.u(), prime_power(p, digits));
  const mpz_class& m = ring.modulus();

  std::vector<IntPair> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i].a = scaled_lift(f.at(i).a(), shift, m);
    d[i].b = scaled_lift(f.at(i).b(), shift, m);
  }
  std::shared_ptr<const BallModel::NewtonNodes> nodes;
  if (n <= kCachedNodeLimit) nodes = ball.newton_nodes(digits);
  const PairInverter inverter(ball, digits);
  IntPair inv;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      std::int64_t e;
      const mpz_class* wa = &inv.a;
      const mpz_class* wb = &inv.b;
      if (nodes) {
        const std::size_t at = i * (i - 1) / 2 + (k - 1);
        e = nodes->shifts[at];
        wa = &nodes->inverse_a[at];
        wb = &nodes->inverse_b[at];
      } else {
        e = inverter(i, i - k, inv.a, inv.b);
      }
      mpz_sub(d[i].a.get_mpz_t(), d[i].a.get_mpz_t(), d[i - 1].a.get_mpz_t());
      mpz_sub(d[i].b.get_mpz_t(), d[i].b.get_mpz_t(), d[i - 1].b.get_mpz_t());
      if (e > 0) {
        const mpz_class& q = prime_power(p, e);
        mpz_divexact(d[i].a.get_mpz_t(), d[i].a.get_mpz_t(), q.get_mpz_t());
        mpz_divexact(d[i].b.get_mpz_t(), d[i].b.get_mpz_t(), q.get_mpz_t());
      }
      ring.mul(d[i], d[i], *wa, *wb);
    }
  }
  // Newton form to monomials: P <- d_k + (x - x_k) P for k = n-2, ..., 0.
  std::vector<IntPair> poly{d[n - 1]};
  poly.reserve(n);
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::int64_t xa = ball.coordinate_a(k);
    const std::int64_t xb = ball.coordinate_b(k);
    poly.push_back(poly.back());
    for (std::size_t j = poly.size() - 2; j >= 1; --j) {
      ring.sub_small_mul(poly[j], poly[j - 1], xa, xb, poly[j]);
    }
    ring.sub_small_mul(poly[0], d[k], xa, xb, poly[0]);
  }
  std::vector<QuadExtElement> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    coeffs.emplace_back(ctx, unscale(c.a, p, shift, target), unscale(c.b, p, shift, target));
  }
  return PolynomialL(std::move(coeffs));
}

bool separates_points(const std::vector<FiniteFunction>& fns, const BallModel& ball) {
  std::unordered_set<std::string> seen;
  seen.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::string key;
    for (const auto& f : fns) {
      key += to_string(f.at(i));
      key += ';';
    }
    if (!seen.insert(std::move(key)).second) return false;
  }
  return true;
}

}  // namespace valfield
