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


#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "commands.hpp"
#include "valfield/funcalg.hpp"
#include "valfield/laurent.hpp"
#include "valfield/padic.hpp"
#include "valfield/quadext.hpp"
#include "valfield/quaternion.hpp"

namespace valfield::cli {
namespace {

// Modular draws keep the stream identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t draw(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

 private:
  std::mt19937_64 gen_;
};

mpq_class random_rational(Rng& rng, std::int64_t p) {
  std::int64_t num = 0;
  while (num == 0) num = rng.draw(-1000000, 1000000);
  mpq_class q(num, rng.draw(1, 1000000));
  const std::int64_t e = rng.draw(-3, 3);
  if (e >= 0) {
    q *= prime_power(p, e);
  } else {
    q /= prime_power(p, -e);
  }
  q.canonicalize();
  return q;
}

PadicNumber random_padic(Rng& rng, std::int64_t p, std::int64_t digits) {
  return PadicNumber::from_rational(random_rational(rng, p), p, digits);
}

LaurentSeries random_series(Rng& rng, std::int64_t p, std::int64_t terms) {
  const std::int64_t m = rng.draw(-5, 5);
  std::map<std::int64_t, std::int64_t> cs;
  cs[m] = rng.draw(1, p - 1);
  for (std::int64_t k = 1; k < terms; ++k) cs[m + k] = rng.draw(0, p - 1);
  return LaurentSeries::from_terms(p, cs, m + terms);
}

// Strong triangle, isosceles and multiplicativity on valuation ranks.
struct AxiomCheck {
  std::int64_t checked = 0;
  std::int64_t isosceles = 0;
  std::optional<std::string> failure;

  void check(ValRank vx, ValRank vy, ValRank vsum, ValRank vprod, const std::string& what) {
    if (failure) return;
    ++checked;
    if (vsum < min(vx, vy)) {
      failure = "strong triangle fails for " + what;
    } else if (vx != vy && vsum != min(vx, vy)) {
      failure = "isosceles equality fails for " + what;
    } else if (vprod != vx + vy) {
      failure = "multiplicativity fails for " + what;
    }
    if (vx != vy) ++isosceles;
  }
};

int finish(Report& r, const std::vector<std::pair<std::string, AxiomCheck>>& parts) {
  bool pass = true;
  for (const auto& [name, c] : parts) {
    r.set(name + "_checked", c.checked);
    r.set(name + "_isosceles", c.isosceles);
    if (c.failure) {
      pass = false;
      r.set(name + "_witness", *c.failure);
      r.line(name + ": FAIL " + *c.failure);
    } else {
      r.line(name + ": " + std::to_string(c.checked) + " pairs, strong triangle and " +
             "multiplicativity hold, " + std::to_string(c.isosceles) + " isosceles cases");
    }
  }
  r.set("result", pass ? "pass" : "fail");
  return pass ? kPass : kFail;
}

int strong_triangle(const SuiteOptions& o, Report& r) {
  Rng rng(o.seed);
  const std::int64_t n = o.trials ? o.trials : 10000;
  std::vector<std::pair<std::string, AxiomCheck>> parts;

  AxiomCheck qp;
  for (std::int64_t i = 0; i < n; ++i) {
    const PadicNumber x = random_padic(rng, o.p, o.digits);
    const PadicNumber y = random_padic(rng, o.p, o.digits);
    qp.check(nu(x), nu(y), nu(x + y), nu(x * y),
             "x=" + to_compact_string(x) + " y=" + to_compact_string(y));
  }
  parts.emplace_back("Q_" + std::to_string(o.p), qp);

  AxiomCheck fp;
  for (std::int64_t i = 0; i < n; ++i) {
    const LaurentSeries x = random_series(rng, o.p, o.digits);
    const LaurentSeries y = random_series(rng, o.p, o.digits);
    fp.check(x.min_degree(), y.min_degree(), (x + y).min_degree(), (x * y).min_degree(),
             "f=" + to_string(x) + " g=" + to_string(y));
  }
  parts.emplace_back("F_" + std::to_string(o.p) + "((T))", fp);

  if (o.p != 2) {
    std::optional<QuadContext> ctx;
    try {
      ctx = QuadContext::make(o.p, o.u);
    } catch (const std::invalid_argument&) {
      r.line("Q_" + std::to_string(o.p) + "(sqrt(" + std::to_string(o.u) +
             ")) skipped: not an unramified quadratic extension");
    }
    if (ctx) {
      AxiomCheck l;
      for (std::int64_t i = 0; i < n; ++i) {
        const QuadExtElement x(*ctx, random_padic(rng, o.p, o.digits),
                               random_padic(rng, o.p, o.digits));
        const QuadExtElement y(*ctx, random_padic(rng, o.p, o.digits),
                               random_padic(rng, o.p, o.digits));
        l.check(omega(x), omega(y), omega(x + y), omega(x * y),
                "x=" + to_string(x) + " y=" + to_string(y));
      }
      parts.emplace_back("Q_" + std::to_string(o.p) + "(sqrt(" + std::to_string(o.u) + "))", l);
    }

    const mpq_class s(o.s);
    const mpq_class t(o.t);
    if (division_evidence(s, t, o.p, 0).kind == DivisionVerdictKind::kDivisionCriterion) {
      const QuaternionAlgebra<PadicNumber> h(s, t, o.p, o.digits);
      AxiomCheck hq;
      const auto rand_q = [&] {
        return h.make(random_padic(rng, o.p, o.digits), random_padic(rng, o.p, o.digits),
                      random_padic(rng, o.p, o.digits), random_padic(rng, o.p, o.digits));
      };
      for (std::int64_t i = 0; i < n; ++i) {
        const auto x = rand_q();
        const auto y = rand_q();
        hq.check(qabs(x).exponent(), qabs(y).exponent(), qabs(qadd(x, y)).exponent(),
                 qabs(qmul(x, y)).exponent(), "q=" + to_string(x) + " r=" + to_string(y));
      }
      parts.emplace_back("H(" + o.s + "," + o.t + ")", hq);
    } else {
      r.line("H(" + o.s + "," + o.t + ") skipped: the division criterion does not apply");
    }
  }
  r.set("trials", n);
  return finish(r, parts);
}

int min_formula(const SuiteOptions& o, Report& r) {
  Rng rng(o.seed);
  const std::int64_t n = o.trials ? o.trials : 10000;
  const mpq_class s(o.s);
  const mpq_class t(o.t);
  const QuaternionAlgebra<PadicNumber> h(s, t, o.p, std::max<std::int64_t>(o.digits, 8));
  r.set("trials", n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto q = h.make(random_padic(rng, o.p, o.digits), random_padic(rng, o.p, o.digits),
                          random_padic(rng, o.p, o.digits), random_padic(rng, o.p, o.digits));
    const ValRank lhs = nu(qnorm(q));
    const ValRank vs = nu_p(s, o.p);
    const ValRank vt = nu_p(t, o.p);
    const ValRank rhs = min(min(nu(q.a()).times(2), vs + nu(q.b()).times(2)),
                            min(vt + nu(q.c()).times(2), vs + vt + nu(q.d()).times(2)));
    if (lhs != rhs) {
      r.set("result", "fail");
      r.set("witness", to_string(q));
      r.set("nu_norm", lhs.to_string());
      r.set("min_terms", rhs.to_string());
      r.line("min-formula fails after " + std::to_string(i) + " samples");
      return kFail;
    }
  }
  r.set("result", "pass");
  r.line("nu(a^2 - s b^2 - t c^2 + st d^2) = min of the termwise valuations for " +
         std::to_string(n) + " samples");
  return kPass;
}

int involution(const SuiteOptions& o, Report& r) {
  const auto ball = BallModel::make(QuadContext::make(o.p, o.u), o.precision);
  std::vector<std::pair<std::string, BallMap>> taus;
  if (o.tau == "tau1" || o.tau == "both") taus.emplace_back("tau1", tau1);
  if (o.tau == "tau2" || o.tau == "both") taus.emplace_back("tau2", tau2);
  if (taus.empty()) throw std::invalid_argument("unknown involution '" + o.tau + "'");
  r.set("N", o.precision);
  r.set("points", ball->size());
  bool pass = true;
  for (const auto& [name, tau] : taus) {
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < ball->size() && !bad; ++i) {
      const QuadExtElement& x = ball->representative(i);
      const QuadExtElement y = tau(x);
      if (!(tau(y) == x) || (!y.is_zero() && omega(y) < ValRank{})) bad = i;
    }
    if (bad) {
      pass = false;
      r.set(name + "_witness_a", ball->coordinate_a(*bad));
      r.set(name + "_witness_b", ball->coordinate_b(*bad));
      r.line(name + ": FAIL at index " + std::to_string(*bad));
    } else {
      r.line(name + ": involution on all " + std::to_string(ball->size()) +
             " representatives, image inside the ball");
    }
  }
  r.set("result", pass ? "pass" : "fail");
  return pass ? kPass : kFail;
}

int density(const SuiteOptions& o, Report& r) {
  Rng rng(o.seed);
  const std::int64_t n = o.trials ? o.trials : 100;
  const QuadContext ctx = QuadContext::make(o.p, o.u);
  const auto ball = BallModel::make(ctx, o.precision);
  const std::int64_t q = ball->modulus();
  const auto random_value = [&] {
    return QuadExtElement::from_rational(ctx, rng.draw(0, q - 1), rng.draw(0, q - 1),
                                         o.precision)
        .reduced_to(o.precision);
  };
  const auto size = static_cast<std::int64_t>(ball->size());
  r.set("N", o.precision);
  r.set("trials", n);

  for (std::int64_t t = 0; t < n; ++t) {
    const auto x = static_cast<std::size_t>(rng.draw(0, size - 1));
    std::vector<std::size_t> ys;
    const std::int64_t count = rng.draw(0, 5);
    while (static_cast<std::int64_t>(ys.size()) < count) {
      const auto y = static_cast<std::size_t>(rng.draw(0, size - 1));
      if (y != x && std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
    }
    const QuadExtElement a = random_value();
    const QuadExtElement b = random_value();
    const Separator h = urysohn_separator(ball, x, ys, a, b);
    bool ok = is_locally_constant(h.function, h.radius) && h.function.at(x) == a;
    for (const auto y : ys) ok = ok && h.function.at(y) == b;
    if (!ok) {
      r.set("result", "fail");
      r.set("urysohn_x", x);
      r.line("Urysohn separator fails at instance " + std::to_string(t));
      return kFail;
    }
  }
  r.line("urysohn: " + std::to_string(n) + " separators locally constant with prescribed values");

  std::int64_t max_degree = -1;
  for (std::int64_t t = 0; t < n; ++t) {
    std::vector<QuadExtElement> values;
    values.reserve(ball->size());
    for (std::size_t i = 0; i < ball->size(); ++i) values.push_back(random_value());
    const FiniteFunction f(ball, std::move(values));
    const PolynomialL poly = interpolate(f);
    max_degree = std::max(max_degree, poly.degree());
    for (std::size_t i = 0; i < ball->size(); ++i) {
      if (!(eval_poly(poly, ball->representative(i), o.precision) == f.at(i))) {
        r.set("result", "fail");
        r.set("density_trial", t);
        r.set("density_index", i);
        r.line("interpolant misses f at index " + std::to_string(i));
        return kFail;
      }
    }
  }
  r.set("max_degree", max_degree);
  r.set("result", "pass");
  r.line("density: " + std::to_string(n) + " random functions reproduced exactly by polynomials" +
         " of degree < " + std::to_string(ball->size()));
  return kPass;
}

int product_formula(const SuiteOptions& o, Report& r) {
  Rng rng(o.seed);
  const std::int64_t n = o.trials ? o.trials : 1000;
  const std::vector<std::int64_t> primes = primes_up_to(99);
  const auto draw_side = [&] {
    mpz_class z = 1;
    const std::int64_t factors = rng.draw(0, 6);
    for (std::int64_t f = 0; f < factors; ++f) {
      z *= primes[static_cast<std::size_t>(rng.draw(0, static_cast<std::int64_t>(primes.size()) - 1))];
    }
    return z;
  };
  r.set("trials", n);
  r.set("bound", 100);
  for (std::int64_t i = 0; i < n; ++i) {
    mpq_class q(draw_side(), draw_side());
    if (rng.draw(0, 1)) q = -q;
    q.canonicalize();
    const mpq_class res = product_formula_residual(q, 100);
    if (res != 1) {
      r.set("result", "fail");
      r.set("witness", q.get_str());
      r.set("residual", res.get_str());
      r.line("product formula fails for " + q.get_str());
      return kFail;
    }
  }
  r.set("result", "pass");
  r.line("|q|_0 * prod_p |q|_p = 1 for " + std::to_string(n) + " rationals");
  return kPass;
}

const std::map<std::string, std::function<int(const SuiteOptions&, Report&)>>& suites() {
  static const std::map<std::string, std::function<int(const SuiteOptions&, Report&)>> table{
      {"strong-triangle", strong_triangle}, {"min-formula", min_formula},
      {"involution", involution},           {"density", density},
      {"product-formula", product_formula}};
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

int run_suite(const SuiteOptions& o, Report& r) {
  const auto it = suites().find(o.suite);
  if (it == suites().end()) {
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown suite '" + o.suite + "' (" + names + ")");
  }
  if (!is_prime(o.p)) throw std::invalid_argument("p must be prime");
  if (o.trials < 0) throw std::invalid_argument("trials must be >= 0");
  r.set("command", "verify");
  r.set("suite", o.suite);
  r.set("seed", std::to_string(o.seed));
  r.set("p", o.p);
  return it->second(o, r);
}

}  // namespace valfield::cli
