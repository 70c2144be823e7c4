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

#ifndef VALFIELD_LAURENT_HPP
#define VALFIELD_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valfield/valcore.hpp"

namespace valfield {

/// Truncated formal Laurent series over F_p: T^m (c_0 + c_1 T + ... + c_{n-1} T^{n-1})
/// with c_0 != 0, known modulo T^(m+n). Zero follows the PadicNumber
/// conventions (exact, or known modulo T^M).
class LaurentSeries {
 public:
  static LaurentSeries zero(std::int64_t p);
  static LaurentSeries zero_mod(std::int64_t p, std::int64_t abs_precision);

  /// sum c_k T^k over the given terms, known modulo T^abs_precision.
  /// Coefficients are reduced mod p (negative ones included); terms at or
  /// above abs_precision are rejected.
  static LaurentSeries from_terms(std::int64_t p, const std::map<std::int64_t, std::int64_t>& terms,
                                  std::int64_t abs_precision);

  /// c T^k with n_terms known coefficients.
  static LaurentSeries monomial(std::int64_t p, std::int64_t c, std::int64_t k,
                                std::int64_t n_terms);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact_zero() const { return coeffs_.empty() && !zero_precision_; }

  /// min{n : c_n != 0}; +infinity at zero.
  ValRank min_degree() const;
  std::int64_t relative_precision() const { return static_cast<std::int64_t>(coeffs_.size()); }
  std::optional<std::int64_t> absolute_precision() const;
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  /// Coefficient of T^k; 0 below the leading term. Throws PrecisionError
  /// at or beyond the known precision.
  std::uint32_t coefficient(std::int64_t k) const;

  LaurentSeries operator-() const;
  LaurentSeries inverse() const;

  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) {
    return x + (-y);
  }
  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator/(const LaurentSeries& x, const LaurentSeries& y) {
    return x * y.inverse();
  }
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y);

 private:
  explicit LaurentSeries(std::int64_t p) : p_(p) {}
  // Drops leading zero coefficients into the degree.
  static LaurentSeries normalize(std::int64_t p, std::int64_t degree,
                                 std::vector<std::uint32_t> coeffs);

  std::int64_t p_;
  std::int64_t degree_ = 0;
  std::vector<std::uint32_t> coeffs_;
  std::optional<std::int64_t> zero_precision_;
};

/// |f|_T = r^(-min degree) for a display radix r > 1; 0 at zero.
AbsValue val_T(const LaurentSeries& f, std::int64_t radix = 2);

/// "1 + 4·T^2 + O(T^3)": nonzero terms in increasing degree, then the
/// truncation order. Exact zero renders as "0".
std::string to_string(const LaurentSeries& f);
/// Inverse of to_string; terms are separated by " + " or " - " and written
/// "c·T^k", "c*T^k", "T^k" or "c". The "O(T^M)" term is required unless the
/// text is "0".
LaurentSeries parse_laurent(std::string_view text, std::int64_t p);

}  // namespace valfield

#endif  // VALFIELD_LAURENT_HPP
