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

#include "valfield/quaternion.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace valfield {

AbsValue qabs(const Quaternion<PadicNumber>& q) {
  const std::int64_t p = q.params().p;
  if (q.is_zero()) return AbsValue::zero(p);
  const PadicNumber n = qnorm(q);
  if (n.is_zero()) {
    throw PrecisionError("norm of " + to_string(q) + " is not known to enough digits");
  }
  return AbsValue(p, nu(n).halved());
}

AbsValue qabs(const Quaternion<mpq_class>& q, std::int64_t p) {
  if (q.is_zero()) return AbsValue::zero(p);
  const mpq_class n = qnorm(q);
  if (sgn(n) == 0) {
    throw ZeroDivisorError("zero divisor " + to_string(q) + " has no absolute value",
                           to_string(q));
  }
  return AbsValue(p, nu_p(n, p).halved());
}

Quaternion<PadicNumber> to_padic(const Quaternion<mpq_class>& q, std::int64_t p,
                                 std::int64_t digits) {
  const QuaternionAlgebra<PadicNumber> algebra(q.params().s, q.params().t, p, digits);
  return algebra.rational(q.a(), q.b(), q.c(), q.d());
}

std::string DivisionVerdict::label() const {
  switch (kind) {
    case DivisionVerdictKind::kDivisionCriterion:
      return "division (criterion)";
    case DivisionVerdictKind::kSplitWitness:
      return "split (witness)";
    case DivisionVerdictKind::kInconclusive:
      break;
  }
  return "inconclusive";
}

std::string DivisionVerdict::to_report() const {
  std::ostringstream os;
  os << "verdict=" << label() << '\n';
  os << "reason=" << reason << '\n';
  os << "trials=" << trials_used << '\n';
  if (exact_witness) {
    os << "witness=" << to_string(*exact_witness) << '\n';
    os << "witness_exact=true\n";
  } else if (witness) {
    os << "witness=" << to_string(*witness) << '\n';
    os << "witness_exact=false\n";
  }
  if (!transcript.empty()) os << '\n';
  for (const auto& line : transcript) os << "search: " << line << '\n';
  return os.str();
}

namespace {

constexpr std::size_t kTranscriptLines = 64;

bool is_rational_square(const mpq_class& r, mpq_class& root) {
  if (sgn(r) < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return false;
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  root = mpq_class(num, den);
  root.canonicalize();
  return true;
}

// (x, y) has the shape x = p * (unit square), y a non-square unit.
bool criterion_holds(const mpq_class& x, const mpq_class& y, std::int64_t p, std::string& why) {
  if (nu_p(x, p) != ValRank::integer(1) || nu_p(y, p) != ValRank::integer(0)) return false;
  const mpq_class cofactor = x / p;
  const auto cofactor_root = sqrt_exists(PadicNumber::from_rational(cofactor, p, 1), 1);
  if (!cofactor_root.exists) return false;
  const auto y_root = sqrt_exists(PadicNumber::from_rational(y, p, 1), 1);
  if (y_root.exists) return false;
  std::ostringstream os;
  os << x.get_str() << " = " << p << " * " << cofactor.get_str() << " with " << cofactor.get_str()
     << " a unit square; " << y.get_str() << " is a non-square unit (leading digit "
     << y_root.target_residue << " not among the squares mod " << p << ")";
  why = os.str();
  return true;
}

std::vector<std::array<std::int64_t, 3>> tuples_of_height(std::int64_t h) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t x = -h; x <= h; ++x) {
    for (std::int64_t y = -h; y <= h; ++y) {
      for (std::int64_t z = -h; z <= h; ++z) {
        if (std::max({std::abs(x), std::abs(y), std::abs(z)}) == h) out.push_back({x, y, z});
      }
    }
  }
  const auto key = [](const std::array<std::int64_t, 3>& v) {
    const std::int64_t l1 = std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
    const int nonzero = (v[0] != 0) + (v[1] != 0) + (v[2] != 0);
    return std::make_tuple(l1, nonzero, -std::abs(v[0]), -std::abs(v[1]), -std::abs(v[2]),
                           v[0] < 0, v[1] < 0, v[2] < 0);
  };
  std::sort(out.begin(), out.end(), [&](const auto& l, const auto& r) { return key(l) < key(r); });
  return out;
}

}  // namespace

DivisionVerdict division_evidence(const mpq_class& s, const mpq_class& t, std::int64_t p,
                                  std::int64_t trials, std::int64_t digits) {
  const QuaternionAlgebra<mpq_class> exact(s, t, p, digits);
  const QuaternionAlgebra<PadicNumber> padic(s, t, p, digits);

  DivisionVerdict out;
  std::string why;
  if (criterion_holds(s, t, p, why) || criterion_holds(t, s, p, why)) {
    out.kind = DivisionVerdictKind::kDivisionCriterion;
    out.reason = why;
    return out;
  }

  static constexpr std::array<char, 4> kNames = {'a', 'b', 'c', 'd'};
  // norm = sum coef[m] x_m^2
  const std::array<mpq_class, 4> coef = {mpq_class(1), -s, -t, s * t};
  std::size_t omitted = 0;
  const auto note_omitted = [&] {
    if (omitted) out.transcript.push_back("... " + std::to_string(omitted) + " lines omitted");
  };
  const auto log = [&](std::string line) {
    if (out.transcript.size() < kTranscriptLines) {
      out.transcript.push_back(std::move(line));
    } else {
      ++omitted;
    }
  };

  for (std::int64_t h = 1; out.trials_used < trials; ++h) {
    for (const auto& tuple : tuples_of_height(h)) {
      if (out.trials_used >= trials) break;
      ++out.trials_used;
      for (std::size_t solve = 0; solve < 4; ++solve) {
        std::array<mpq_class, 4> x;
        mpq_class rest = 0;
        for (std::size_t m = 0, slot = 0; m < 4; ++m) {
          if (m == solve) continue;
          x[m] = static_cast<long>(tuple[slot++]);
          rest += coef[m] * x[m] * x[m];
        }
        const mpq_class target = -rest / coef[solve];
        std::ostringstream line;
        line << "trial " << out.trials_used << ": others=(" << tuple[0] << "," << tuple[1] << ","
             << tuple[2] << ") solve " << kNames[solve] << "^2 = " << target.get_str();

        mpq_class root;
        if (is_rational_square(target, root)) {
          x[solve] = root;
          const auto q = exact.make(x[0], x[1], x[2], x[3]);
          if (sgn(qnorm(q)) == 0 && !q.is_zero()) {
            line << ": rational root " << root.get_str();
            log(line.str());
            out.kind = DivisionVerdictKind::kSplitWitness;
            out.exact_witness = q;
            out.witness = to_padic(q, p, digits);
            out.reason = "nonzero " + to_string(q) + " has norm 0";
            note_omitted();
            return out;
          }
        }
        const auto lifted = sqrt_exists(PadicNumber::from_rational(target, p, digits), digits);
        if (!lifted.exists) {
          line << ": no root in Q_" << p << " (" << lifted.reason << ")";
          log(line.str());
          continue;
        }
        std::array<PadicNumber, 4> y = {padic.scalar(x[0]), padic.scalar(x[1]),
                                        padic.scalar(x[2]), padic.scalar(x[3])};
        y[solve] = *lifted.witness;
        const auto q = padic.make(y[0], y[1], y[2], y[3]);
        if (!q.is_zero() && qnorm(q).is_zero()) {
          line << ": Hensel root " << to_compact_string(*lifted.witness);
          log(line.str());
          out.kind = DivisionVerdictKind::kSplitWitness;
          out.witness = q;
          out.reason = "nonzero " + to_string(q) + " has norm 0 modulo " + std::to_string(p) +
                       "^" + std::to_string(*qnorm(q).absolute_precision());
          note_omitted();
          return out;
        }
        log(line.str() + ": lift did not cancel");
      }
    }
  }
  out.kind = DivisionVerdictKind::kInconclusive;
  out.reason = "no norm-zero element among " + std::to_string(out.trials_used) +
               " tuples; the search cannot prove division";
  note_omitted();
  return out;
}

}  // namespace valfield
