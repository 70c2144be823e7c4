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


// Brute-force reference computations. Nothing here calls into valfield, so
// agreement with the library is evidence rather than repetition.

#ifndef VALFIELD_TESTS_ORACLES_HPP
#define VALFIELD_TESTS_ORACLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::int64_t valuation(mpz_class n, std::int64_t p) {
  if (n == 0) return INT64_MAX;
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::int64_t valuation(const mpq_class& q, std::int64_t p) {
  if (q == 0) return INT64_MAX;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

inline mpz_class power(std::int64_t p, std::int64_t k) {
  mpz_class out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= p;
  return out;
}

// p-adic digits of num/den by digit-at-a-time long division: find d with
// num - d den = 0 mod p by search, then divide by p.
inline std::vector<std::uint32_t> digits(mpz_class num, mpz_class den, std::int64_t p,
                                         std::int64_t n) {
  while (num != 0 && num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  std::vector<std::uint32_t> out;
  for (std::int64_t k = 0; k < n; ++k) {
    std::uint32_t d = 0;
    while (mpz_class(num - d * den) % p != 0) ++d;
    out.push_back(d);
    num = (num - d * den) / p;
  }
  return out;
}

// Prime factorization by trial division; exponents are signed for rationals.
inline std::map<std::int64_t, std::int64_t> factor(const mpq_class& q) {
  std::map<std::int64_t, std::int64_t> out;
  auto run = [&out](mpz_class n, int sign) {
    n = abs(n);
    for (std::int64_t d = 2; n > 1; ++d) {
      while (n % d == 0) {
        out[d] += sign;
        n /= d;
      }
    }
  };
  run(q.get_num(), 1);
  run(q.get_den(), -1);
  return out;
}

// |q|_0 * prod_p |q|_p from the factorization.
inline mpq_class product_formula(const mpq_class& q) {
  mpq_class out = abs(q);
  for (const auto& [p, e] : factor(q)) {
    // |q|_p = p^(-e)
    mpq_class f = power(p, e >= 0 ? e : -e);
    out = e >= 0 ? mpq_class(out / f) : mpq_class(out * f);
  }
  out.canonicalize();
  return out;
}

// Is the unit part of u a square mod p^k (searching every residue)?
// Odd valuation means no root. Needs p^k < 2^31.
inline bool has_sqrt_mod(std::int64_t u, std::int64_t p, std::int64_t k) {
  if (u == 0) return false;
  const std::int64_t v = valuation(mpz_class(u), p);
  if (v % 2 != 0) return false;
  for (std::int64_t i = 0; i < v; ++i) u /= p;
  std::int64_t m = 1;
  for (std::int64_t i = 0; i < k; ++i) m *= p;
  const std::int64_t target = ((u % m) + m) % m;
  for (std::int64_t w = 0; w < m; ++w) {
    if (w * w % m == target) return true;
  }
  return false;
}

// Quaternion product through words i^a j^b: (i^a j^b)(i^c j^d) =
// (-1)^(bc) i^(a+c) j^(b+d), then i^2 = s, j^2 = t. Basis 1, i, j, k = ij.
using Quat = std::array<mpq_class, 4>;

inline Quat qmul(const Quat& x, const Quat& y, const mpq_class& s, const mpq_class& t) {
  static constexpr int kA[4] = {0, 1, 0, 1};
  static constexpr int kB[4] = {0, 0, 1, 1};
  Quat out{0, 0, 0, 0};
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      mpq_class c = x[m] * y[n];
      if (kB[m] * kA[n] % 2) c = -c;
      int a = kA[m] + kA[n];
      int b = kB[m] + kB[n];
      if (a == 2) {
        c *= s;
        a = 0;
      }
      if (b == 2) {
        c *= t;
        b = 0;
      }
      out[a + 2 * b] += c;
    }
  }
  return out;
}

inline Quat qconj(const Quat& x) { return {x[0], -x[1], -x[2], -x[3]}; }

// Cauchy product of coefficient lists mod p (lowest degree first).
inline std::vector<std::int64_t> cauchy(const std::vector<std::int64_t>& f,
                                        const std::vector<std::int64_t>& g, std::int64_t p) {
  std::vector<std::int64_t> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  }
  for (auto& c : out) c = (c % p + p) % p;
  return out;
}

// Twice omega(a + b sqrt(u)) for rationals: nu_p(a^2 - u b^2).
inline std::int64_t twice_omega(const mpq_class& a, const mpq_class& b, std::int64_t u,
                                std::int64_t p) {
  return valuation(mpq_class(a * a - u * b * b), p);
}

// Reproducible sampling for the tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  std::int64_t draw(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Nonzero rational p^e * n / d with |n|, d <= bound.
  mpq_class rational(std::int64_t p, std::int64_t bound = 100000, std::int64_t spread = 3) {
    std::int64_t n = 0;
    while (n == 0) n = draw(-bound, bound);
    mpq_class q(n, draw(1, bound));
    const std::int64_t e = draw(-spread, spread);
    q = e >= 0 ? mpq_class(q * power(p, e)) : mpq_class(q / power(p, -e));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle

#endif  // VALFIELD_TESTS_ORACLES_HPP
