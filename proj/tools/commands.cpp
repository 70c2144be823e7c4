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


#include "commands.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "expr.hpp"
#include "valfield/errors.hpp"
#include "valfield/funcalg.hpp"
#include "valfield/laurent.hpp"
#include "valfield/padic.hpp"
#include "valfield/quadext.hpp"
#include "valfield/quaternion.hpp"

namespace valfield::cli {

void Report::set(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : fields_) os << k << '=' << v << '\n';
  os << '\n';
  for (const auto& l : body_) os << l << '\n';
  return os.str();
}

namespace {

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

mpz_class parse_integer(const std::string& text) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return z;
}

// Expression algebras.

struct ExtAlgebra {
  using Value = QuadExtElement;
  QuadContext ctx;
  std::int64_t digits;

  Value integer(const mpz_class& n) const {
    return QuadExtElement::from_rational(ctx, mpq_class(n), 0, digits);
  }
  std::optional<Value> name(const std::string& id) const {
    if (id == "sqrtu") return QuadExtElement::sqrt_u(ctx, digits);
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value mul(const Value& x, const Value& y) const { return x * y; }
  Value div(const Value& x, const Value& y) const { return x * inv(y); }
  Value neg(const Value& x) const { return -x; }
  Value conj(const Value& x) const { return conj_g(x); }
  Value norm(const Value& x) const { return {ctx, x.norm(), PadicNumber::zero(ctx.prime())}; }
  Value inv(const Value& x) const {
    if (x.is_zero()) throw std::domain_error("zero has no inverse");
    return x.inverse();
  }
};

template <class F>
struct QuatAlgebra {
  using Value = Quaternion<F>;
  QuaternionAlgebra<F> alg;

  Value integer(const mpz_class& n) const { return alg.rational(mpq_class(n), 0, 0, 0); }
  std::optional<Value> name(const std::string& id) const {
    if (id == "i") return alg.i();
    if (id == "j") return alg.j();
    if (id == "k") return alg.k();
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return qadd(x, y); }
  Value sub(const Value& x, const Value& y) const { return qsub(x, y); }
  Value mul(const Value& x, const Value& y) const { return qmul(x, y); }
  Value div(const Value& x, const Value& y) const { return qmul(x, qinv(y)); }
  Value neg(const Value& x) const { return qneg(x); }
  Value conj(const Value& x) const { return qconj(x); }
  Value norm(const Value& x) const {
    const auto z = alg.scalar(0);
    return alg.make(qnorm(x), z, z, z);
  }
  Value inv(const Value& x) const { return qinv(x); }
};

// Command bodies.

int cmd_expand(const std::string& num_text, const std::string& den_text, std::int64_t p,
               std::int64_t digits, std::ostream& out) {
  const mpz_class num = parse_integer(num_text);
  const mpz_class den = parse_integer(den_text);
  const PadicNumber x = PadicNumber::from_rational(num, den, p, digits);
  Report r;
  r.set("command", "expand");
  r.set("num", num.get_str());
  r.set("den", den.get_str());
  r.set("p", p);
  r.set("digits", digits);
  r.set("valuation", x.valuation().to_string());
  r.set("digit_list", join(x.digits()));
  r.set("compact", to_compact_string(x));
  if (!x.is_zero()) {
    const DigitPeriod period = digit_period(mpq_class(num, den), p);
    r.set("preperiod", period.preperiod);
    r.set("period", period.period);
  }
  mpq_class q(num, den);
  q.canonicalize();
  r.line(q.get_str() + " = " + to_series_string(x));
  out << r.str();
  return kPass;
}

int cmd_sqrt(const std::string& u_text, std::int64_t p, std::int64_t digits, std::ostream& out) {
  const PadicNumber u = PadicNumber::from_rational(parse_rational(u_text), p, digits);
  const SqrtResult res = sqrt_exists(u, digits);
  Report r;
  r.set("command", "sqrt");
  r.set("u", u_text);
  r.set("p", p);
  r.set("digits", digits);
  r.set("exists", res.exists);
  std::string squares;
  for (const auto s : res.squares_mod_p) squares += (squares.empty() ? "" : ",") + std::to_string(s);
  r.set("squares_mod_p", squares);
  r.set("target_residue", res.target_residue);
  if (res.witness) r.set("witness", to_compact_string(*res.witness));
  if (!res.reason.empty()) r.set("reason", res.reason);
  if (res.exists) {
    r.line("u has a square root in Q_" + std::to_string(p) + ": " +
           to_series_string(*res.witness));
  } else {
    r.line("u has no square root in Q_" + std::to_string(p) + ": " + res.reason);
  }
  out << r.str();
  return kPass;
}

int cmd_ext(const std::string& expr, std::int64_t p, std::int64_t u, std::int64_t digits,
            std::ostream& out) {
  const ExtAlgebra alg{QuadContext::make(p, u), digits};
  const QuadExtElement x = ExprParser<ExtAlgebra>(alg, expr).parse();
  Report r;
  r.set("command", "ext");
  r.set("p", p);
  r.set("u", u);
  r.set("digits", digits);
  r.set("expr", expr);
  r.set("value", to_string(x));
  r.set("a", to_compact_string(x.a()));
  r.set("b", to_compact_string(x.b()));
  r.set("norm", to_compact_string(x.norm()));
  r.set("omega", omega(x).to_string());
  r.set("abs", abs_L(x).to_string());
  r.set("inverse", x.is_zero() ? std::string("none") : to_string(x.inverse()));
  r.line("x = " + to_series_string(x.a()) + " + (" + to_series_string(x.b()) + ")*sqrt(" +
         std::to_string(u) + ")");
  r.line("|x|_L = " + abs_L(x).to_string());
  out << r.str();
  return kPass;
}

template <class F>
void quat_fields(Report& r, const Quaternion<F>& q, std::int64_t p) {
  r.set("value", to_string(q));
  const F n = qnorm(q);
  const bool zero_divisor = !q.is_zero() && detail::coeff_is_zero(n);
  if constexpr (std::is_same_v<F, mpq_class>) {
    r.set("norm", n.get_str());
    r.set("norm_valuation", nu_p(n, p).to_string());
    r.set("abs", zero_divisor ? std::string("undefined") : qabs(q, p).to_string());
  } else {
    r.set("norm", to_compact_string(n));
    r.set("norm_valuation", nu(n).to_string());
    r.set("abs", zero_divisor ? std::string("undefined") : qabs(q).to_string());
  }
  if (q.is_zero()) {
    r.set("inverse", "none");
    return;
  }
  try {
    r.set("inverse", to_string(qinv(q)));
  } catch (const ZeroDivisorError& e) {
    r.set("inverse", "none");
    r.set("zero_divisor", e.witness());
  }
}

int cmd_quat(const std::string& expr, const std::string& s, const std::string& t,
             std::int64_t p, bool padic, std::int64_t digits, std::ostream& out) {
  Report r;
  r.set("command", "quat");
  r.set("s", s);
  r.set("t", t);
  r.set("p", p);
  r.set("mode", padic ? "padic" : "exact");
  if (padic) r.set("digits", digits);
  r.set("expr", expr);
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (padic) {
    const QuatAlgebra<PadicNumber> alg{
        QuaternionAlgebra<PadicNumber>(parse_rational(s), parse_rational(t), p, digits)};
    const auto q = ExprParser<QuatAlgebra<PadicNumber>>(alg, expr).parse();
    quat_fields(r, q, p);
    r.line("q = " + to_string(q));
  } else {
    const QuatAlgebra<mpq_class> alg{
        QuaternionAlgebra<mpq_class>(parse_rational(s), parse_rational(t), p)};
    const auto q = ExprParser<QuatAlgebra<mpq_class>>(alg, expr).parse();
    quat_fields(r, q, p);
    r.line("q = " + to_string(q));
  }
  out << r.str();
  return kPass;
}

int cmd_laurent(const std::string& text, std::int64_t p, std::int64_t radix,
                const std::string& times, const std::string& plus, const std::string& over,
                bool invert, std::ostream& out) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  LaurentSeries f = parse_laurent(text, p);
  std::string op = "none";
  if (!times.empty()) {
    f = f * parse_laurent(times, p);
    op = "mul";
  } else if (!plus.empty()) {
    f = f + parse_laurent(plus, p);
    op = "add";
  } else if (!over.empty()) {
    f = f / parse_laurent(over, p);
    op = "div";
  }
  if (invert) {
    if (f.is_zero()) throw std::domain_error("zero has no inverse");
    f = f.inverse();
    op = op == "none" ? "inv" : op + ",inv";
  }
  Report r;
  r.set("command", "laurent");
  r.set("p", p);
  r.set("radix", radix);
  r.set("input", text);
  r.set("op", op);
  r.set("value", to_string(f));
  r.set("min_degree", f.min_degree().to_string());
  r.set("abs", val_T(f, radix).to_string());
  r.line("f = " + to_string(f));
  r.line("|f|_T = " + val_T(f, radix).to_string());
  out << r.str();
  return kPass;
}

int cmd_division(const std::string& s, const std::string& t, std::int64_t p,
                 std::int64_t trials, std::int64_t digits, std::ostream& out) {
  const DivisionVerdict v = division_evidence(parse_rational(s), parse_rational(t), p, trials,
                                              digits);
  out << "command=division\n"
      << "s=" << s << "\nt=" << t << "\np=" << p << "\nbudget=" << trials
      << "\ndigits=" << digits << '\n'
      << v.to_report();
  return kPass;
}

BallMap pick_tau(const std::string& name) {
  if (name == "tau1") return tau1;
  if (name == "tau2") return tau2;
  throw std::invalid_argument("unknown involution '" + name + "' (tau1, tau2)");
}

int cmd_model(std::int64_t p, std::int64_t u, std::int64_t n, const std::string& tau,
              std::optional<std::int64_t> monomial, std::ostream& out) {
  const auto ball = BallModel::make(QuadContext::make(p, u), n);
  if (!monomial) {
    out << "command=model\np=" << p << "\nu=" << u << "\nN=" << n << "\nsize=" << ball->size()
        << "\n\n"
        << ball->dump();
    return kPass;
  }
  if (*monomial < 0) throw std::invalid_argument("monomial degree must be >= 0");
  const std::int64_t k = *monomial;
  const auto f = FiniteFunction::tabulate(ball, [k, &ball](const QuadExtElement& x) {
    QuadExtElement y = QuadExtElement::from_rational(x.context(), 1, 0, ball->working_digits());
    for (std::int64_t e = 0; e < k; ++e) y = y * x;
    return y;
  });
  const MembershipReport m = in_CXtau(f, pick_tau(tau), conj_g);
  Report r;
  r.set("command", "model");
  r.set("p", p);
  r.set("u", u);
  r.set("N", n);
  r.set("tau", tau);
  r.set("function", "x^" + std::to_string(k));
  std::istringstream fields(m.to_report(*ball));
  for (std::string line; std::getline(fields, line);) {
    const auto eq = line.find('=');
    r.set(line.substr(0, eq), line.substr(eq + 1));
  }
  if (m.member) {
    r.line("f(x) = x^" + std::to_string(k) + " satisfies f(" + tau + "(x)) = g(f(x)) at all " +
           std::to_string(ball->size()) + " representatives");
  } else {
    r.line("f(x) = x^" + std::to_string(k) + " fails f(" + tau + "(x)) = g(f(x)) at x = " +
           to_string(ball->representative(*m.witness).reduced_to(n)));
  }
  out << r.str();
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"valued fields, quaternion algebras and finite function-algebra models", "valfield"};
  app.require_subcommand(1);

  std::int64_t p = 5;
  std::int64_t u = 2;
  std::int64_t digits = 10;
  std::int64_t precision = 2;
  std::int64_t trials = 0;
  std::int64_t radix = 2;
  std::uint64_t seed = kDefaultSeed;
  std::string s = "5";
  std::string t = "2";
  std::string tau;
  std::string suite;
  std::string a1, a2;
  std::string times, plus, over;
  bool invert = false;
  bool padic = false;
  std::optional<std::int64_t> monomial;

  auto* expand = app.add_subcommand("expand", "p-adic expansion of num/den");
  expand->add_option("num", a1, "numerator")->required();
  expand->add_option("den", a2, "denominator")->required();
  expand->add_option("--p", p, "prime")->capture_default_str();
  expand->add_option("--digits", digits, "digits after the leading one")->capture_default_str();

  auto* sqrt = app.add_subcommand("sqrt", "square root of a rational in Q_p");
  sqrt->add_option("u", a1, "rational radicand")->required();
  sqrt->add_option("--p", p, "odd prime")->capture_default_str();
  sqrt->add_option("--digits", digits, "digits to lift")->capture_default_str();

  auto* ext = app.add_subcommand("ext", "calculator in Q_p(sqrt(u))");
  ext->add_option("expr", a1, "expression over integers, sqrtu, conj, norm, inv")->required();
  ext->add_option("--p", p, "odd prime")->capture_default_str();
  ext->add_option("--u", u, "non-square unit")->capture_default_str();
  ext->add_option("--digits", digits, "relative digits of literals")->capture_default_str();

  auto* quat = app.add_subcommand("quat", "calculator in the quaternion algebra (s, t)");
  quat->add_option("expr", a1, "expression over integers, i, j, k, conj, norm, inv")->required();
  quat->add_option("--s", s, "i^2")->capture_default_str();
  quat->add_option("--t", t, "j^2")->capture_default_str();
  quat->add_option("--p", p, "prime for valuations")->capture_default_str();
  quat->add_flag("--padic", padic, "p-adic coefficients instead of exact rationals");
  quat->add_option("--digits", digits, "relative digits in --padic mode")->capture_default_str();

  auto* laurent = app.add_subcommand("laurent", "series in F_p((T))");
  laurent->add_option("series", a1, "e.g. \"1 + 2*T + O(T^4)\"")->required();
  laurent->add_option("--p", p, "prime")->capture_default_str();
  laurent->add_option("--radix", radix, "display radix r > 1 of |f|_T")->capture_default_str();
  auto* o_times = laurent->add_option("--times", times, "multiply by a second series");
  auto* o_plus = laurent->add_option("--plus", plus, "add a second series");
  auto* o_over = laurent->add_option("--over", over, "divide by a second series");
  o_times->excludes(o_plus)->excludes(o_over);
  o_plus->excludes(o_over);
  laurent->add_flag("--inverse", invert, "invert the result");

  auto* division = app.add_subcommand("division", "is (s, t / Q_p) a division algebra?");
  division->add_option("--s", s, "i^2")->capture_default_str();
  division->add_option("--t", t, "j^2")->capture_default_str();
  division->add_option("--p", p, "odd prime")->capture_default_str();
  std::int64_t budget = 2000;
  division->add_option("--trials", budget, "search budget")->capture_default_str();
  division->add_option("--digits", digits, "p-adic digits for lifted witnesses");

  auto* model = app.add_subcommand("model", "finite model of the unit ball of Q_p(sqrt(u))");
  model->add_option("--p", p, "odd prime")->capture_default_str();
  model->add_option("--u", u, "non-square unit")->capture_default_str();
  model->add_option("-N,--N,--precision", precision, "model precision")->capture_default_str();
  model->add_option("--tau", tau, "tau1 or tau2")->default_str("tau1");
  model->add_option("--monomial", monomial, "membership report for f(x) = x^k");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  auto* o_pos = verify->add_option("suite_name", a1, "suite");
  auto* o_suite = verify->add_option("--suite", suite, "suite");
  o_pos->excludes(o_suite);
  verify->add_option("--p", p, "prime")->capture_default_str();
  verify->add_option("--u", u, "non-square unit")->capture_default_str();
  verify->add_option("--s", s, "i^2")->capture_default_str();
  verify->add_option("--t", t, "j^2")->capture_default_str();
  verify->add_option("-N,--N,--precision", precision, "model precision")->capture_default_str();
  verify->add_option("--digits", digits, "p-adic digits");
  verify->add_option("--trials", trials, "number of samples (0: suite default)");
  verify->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  verify->add_option("--tau", tau, "tau1, tau2 or both")->default_str("both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*expand) return cmd_expand(a1, a2, p, digits, out);
    if (*sqrt) return cmd_sqrt(a1, p, digits, out);
    if (*ext) return cmd_ext(a1, p, u, ext->count("--digits") ? digits : 16, out);
    if (*quat) return cmd_quat(a1, s, t, p, padic, quat->count("--digits") ? digits : 16, out);
    if (*laurent) {
      return cmd_laurent(a1, p, radix, *o_times ? times : "", *o_plus ? plus : "",
                         *o_over ? over : "", invert, out);
    }
    if (*division) {
      return cmd_division(s, t, p, budget, division->count("--digits") ? digits : 16, out);
    }
    if (*model) return cmd_model(p, u, precision, tau.empty() ? "tau1" : tau, monomial, out);
    if (*verify) {
      SuiteOptions o;
      o.suite = *o_pos ? a1 : suite;
      if (o.suite.empty()) throw std::invalid_argument("no suite given");
      o.p = p;
      o.u = u;
      o.s = s;
      o.t = t;
      o.precision = precision;
      o.digits = verify->count("--digits") ? digits : 16;
      o.trials = trials;
      o.seed = seed;
      o.tau = tau.empty() ? "both" : tau;
      Report r;
      const int code = run_suite(o, r);
      out << r.str();
      return code;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ZeroDivisorError& e) {
    err << "error: " << e.what() << '\n' << "witness: " << e.witness() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace valfield::cli
