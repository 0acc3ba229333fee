/*
 * Copyright 2026 The sbraid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/// \file laurent.hpp
/// Exact integer polynomial arithmetic in one variable `t` and integer
/// Laurent polynomials in two variables `(x, u)`. Coefficients are GMP
/// integers; nothing in this header touches floating point.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sbraid {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with integer coefficients, stored in
/// ascending degree order. The leading coefficient is never zero; the
/// zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^i; zero beyond the degree.
  const Integer& coeff(std::size_t i) const noexcept;
  const Integer& leading() const noexcept { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Number of nonzero coefficients.
  std::size_t term_count() const noexcept;

  IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& s);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const Integer& s) { return lhs *= s; }
  friend IntPoly operator-(IntPoly p) { return p *= Integer(-1); }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human form, highest degree first: `t^4 - t^3 - t^2 - t + 1`.
  std::string to_string(char var = 't') const;
  /// Ascending coefficients separated by commas: `1,-1,-1,-1,1`.
  std::string to_csv() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// t^shift * body(t). `body` need not have a nonzero constant term.
struct LaurentPoly {
  std::int64_t shift = 0;
  IntPoly body;

  bool is_zero() const noexcept { return body.is_zero(); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

/// Integer Laurent polynomial in (x, u). Keys are exponent pairs (i, j)
/// for the monomial x^i u^j; stored coefficients are never zero.
class BivariateLaurent {
 public:
  struct Term {
    std::int64_t x_exp;
    std::int64_t u_exp;
    long coeff;
  };

  BivariateLaurent() = default;
  BivariateLaurent(std::initializer_list<Term> terms);

  void add_term(std::int64_t x_exp, std::int64_t u_exp, const Integer& c);

  const std::map<std::pair<std::int64_t, std::int64_t>, Integer>& terms() const noexcept {
    return terms_;
  }
  bool is_zero() const noexcept { return terms_.empty(); }

  BivariateLaurent& operator+=(const BivariateLaurent& rhs);
  friend BivariateLaurent operator+(BivariateLaurent lhs, const BivariateLaurent& rhs) {
    return lhs += rhs;
  }
  friend BivariateLaurent operator*(const BivariateLaurent& lhs, const BivariateLaurent& rhs);
  friend bool operator==(const BivariateLaurent&, const BivariateLaurent&) = default;

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> terms_;
};

/// Substitutes x = t^a, u = t^b. Colliding exponents are summed and zero
/// results dropped; the returned shift is the lowest surviving exponent.
LaurentPoly specialize(const BivariateLaurent& p, std::int64_t a, std::int64_t b);

/// Multiplies by t^(-lowest exponent) so the constant term is nonzero and
/// makes the leading coefficient positive. Throws std::invalid_argument on
/// the zero polynomial.
IntPoly clear_shift(const LaurentPoly& q);

/// Returns p, or -p when the leading coefficient is negative.
IntPoly normalize_sign(IntPoly p);

/// p(-t) with positive leading coefficient.
IntPoly negate_variable(const IntPoly& p);

/// True iff the coefficient sequence is a palindrome up to a global sign.
bool is_reciprocal(const IntPoly& p);

struct Division {
  IntPoly quotient;
  IntPoly remainder;
  /// False when every step divided exactly over the integers. True when
  /// integer pseudo-division was needed; then scale * p = q * d + r.
  bool pseudo = false;
  Integer scale = 1;
};

/// Long division of p by d. Throws std::domain_error when d is zero.
Division divide(const IntPoly& p, const IntPoly& d);

/// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p mod d.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d);

Integer content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Greatest common divisor in Z[t], primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/// p(q) by Horner's rule over exact rationals.
Rational eval_rational(const IntPoly& p, const Rational& q);

/// Sign of p(q) in {-1, 0, 1}. Avoids rational normalization; uses shifts
/// when the denominator of q is a power of two.
int sign_at(const IntPoly& p, const Rational& q);

/// p(t + s).
IntPoly taylor_shift(const IntPoly& p, const Integer& s);

/// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const IntPoly& p);

}  // namespace sbraid
