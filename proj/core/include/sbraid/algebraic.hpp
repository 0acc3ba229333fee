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

/// \file algebraic.hpp
/// Certified real algebraic numbers and root-modulus enclosures.
///
/// An AlgebraicValue pins down one real root of an integer polynomial by
/// a rational isolating interval whose uniqueness has been certified with
/// Descartes' rule of signs. Refinement is plain bisection with exact sign
/// evaluation. Maximum root moduli (the house of a polynomial) come from
/// Graeffe root squaring over exact integers.

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "sbraid/laurent.hpp"

namespace sbraid {

/// Thrown when a comparison or truncation cannot be decided within the
/// refinement budget.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPrecisionBits = 60;

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const RationalInterval& o) const { return hi < o.lo || o.hi < lo; }
  double midpoint() const;
};

/// A real root of `defining` isolated in [lo, hi]. When lo == hi the root
/// is the rational lo itself. Otherwise defining(lo) and defining(hi) are
/// nonzero with opposite signs and [lo, hi] contains no other real root.
class AlgebraicValue {
 public:
  /// Caller guarantees the isolation invariants; only cheap checks run.
  AlgebraicValue(IntPoly defining, Rational lo, Rational hi, int precision_bits);

  static AlgebraicValue exact(IntPoly defining, const Rational& value);

  const IntPoly& defining() const noexcept { return defining_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  int precision_bits() const noexcept { return precision_bits_; }
  bool is_exact() const { return lo_ == hi_; }
  RationalInterval interval() const { return {lo_, hi_}; }
  Rational width() const { return hi_ - lo_; }
  double approx() const;

  /// Bisects until the width is at most 2^-bits. Never coarsens.
  AlgebraicValue refined(int bits) const;

 private:
  IntPoly defining_;
  Rational lo_;
  Rational hi_;
  int precision_bits_;
  int lo_sign_;
};

/// 1 + max |c_i| / |c_n|. All complex roots have modulus below this.
/// Throws std::invalid_argument for constant polynomials.
Rational cauchy_bound(const IntPoly& p);

/// Number of sign variations of (1+x)^n p((lo + hi x)/(1 + x)); an upper
/// bound on the real roots of p in (lo, hi), exact when 0 or 1.
int descartes_bound(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Same bound for the half-line (lo, +inf).
int descartes_bound_above(const IntPoly& p, const Rational& lo);

/// Diagnostics from largest_real_root.
struct RootSearchTrace {
  long cells_evaluated = 0;
  int escalations = 0;
  bool descartes_fallback = false;
};

/// Largest real root of p that exceeds 1, certified and refined to width
/// at most 2^-precision_bits; std::nullopt when no root exceeds 1.
/// Scans a dyadic grid of (1, B] from the top (B is the Cauchy bound
/// rounded up to a power of two), then certifies the located cell with
/// Descartes' rule. An ambiguous scan is redone with the squared cell
/// count, then falls back to Descartes bisection.
std::optional<AlgebraicValue> largest_real_root(const IntPoly& p,
                                                int precision_bits = kDefaultPrecisionBits,
                                                RootSearchTrace* trace = nullptr);

/// Enclosure of the maximum modulus over all complex roots.
struct ModulusBound {
  Rational lower;
  Rational upper;
  int iterations = 0;
  /// True when upper/lower <= 1 + 2^-precision_bits was reached.
  bool converged = false;

  RationalInterval interval() const { return {lower, upper}; }
};

struct GraeffeOptions {
  int max_iterations = 64;
  /// Stop squaring once the summed coefficient size passes this many bits.
  std::size_t max_total_bits = std::size_t{1} << 24;
};

/// Successive Graeffe squarings p_0 = p, p_{k+1}(x^2) = ±p_k(x) p_k(-x).
/// The roots of p_k are the 2^k-th powers of the roots of p.
class GraeffeSequence {
 public:
  /// Requires degree >= 1 and a nonzero constant term.
  explicit GraeffeSequence(IntPoly p);

  void step();
  int iterations() const noexcept { return iterations_; }
  const IntPoly& current() const noexcept { return current_; }
  std::size_t total_bits() const;

  /// Certified enclosure of the maximum root modulus of the original
  /// polynomial, computed from the current iterate. Root extraction is
  /// outward rounded at `working_bits` of binary precision.
  ModulusBound bound(int working_bits) const;

 private:
  IntPoly current_;
  int iterations_ = 0;
};

/// Iterates Graeffe squaring until upper/lower <= 1 + 2^-precision_bits
/// or the options' budget is exhausted; the bracket is returned either way.
/// Throws std::invalid_argument on zero constant term or degree < 1.
ModulusBound max_root_modulus(const IntPoly& p, int precision_bits = kDefaultPrecisionBits,
                              const GraeffeOptions& options = {});

/// Certified order of two real algebraic values. Refines until the
/// intervals separate; overlapping intervals are declared equal only when
/// the gcd of the defining polynomials changes sign (or vanishes) on the
/// intersection. Throws InconclusiveError past `max_bits`.
std::strong_ordering compare(const AlgebraicValue& u, const AlgebraicValue& v, int max_bits = 4096);

std::string to_string(std::strong_ordering order);

/// [lo^n, hi^n]; requires lo > 0.
RationalInterval power(const AlgebraicValue& u, unsigned long n);
RationalInterval power(const RationalInterval& x, unsigned long n);

/// Outward-rounded enclosure of log(x) for x.lo > 0.
RationalInterval log_enclosure(const RationalInterval& x, int working_bits);

/// Outward-rounded enclosure of 1 / x for x not containing 0.
RationalInterval reciprocal(const RationalInterval& x);

/// Decimal string of floor(x * 10^digits) / 10^digits.
std::string floor_decimal(const Rational& x, int digits);

/// Truncates the value produced by `enclose(bits)` to `digits` decimals.
/// Doubles the bits until both endpoints truncate to the same string.
std::string truncate_decimal(const std::function<RationalInterval(int)>& enclose, int digits,
                             int start_bits = kDefaultPrecisionBits, int max_bits = 8192);

std::string truncate_decimal(const AlgebraicValue& v, int digits);

/// Nearest rounding to `digits` decimals, ties upward, certified the same
/// way as truncate_decimal.
std::string round_decimal(const std::function<RationalInterval(int)>& enclose, int digits,
                          int start_bits = kDefaultPrecisionBits, int max_bits = 8192);

std::string round_decimal(const AlgebraicValue& v, int digits);

}  // namespace sbraid
