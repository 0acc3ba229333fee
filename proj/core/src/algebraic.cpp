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

#include "sbraid/algebraic.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include <mpfr.h>

namespace sbraid {

namespace {

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational dyadic(long e) {  // 2^e for any sign of e
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

bool width_within(const Rational& lo, const Rational& hi, int bits) {
  Rational w = hi - lo;
  return w * dyadic(bits) <= 1;
}

// D^n p(x / D) for a positive integer D.
IntPoly scaled_numerator(const IntPoly& p, const Integer& den) {
  auto cs = p.coefficients();
  const std::size_t n = cs.size() - 1;
  std::vector<Integer> out(cs.size());
  Integer dp = 1;
  for (std::size_t k = 0; k <= n; ++k) {  // coefficient of x^(n-k) gets D^k
    out[n - k] = cs[n - k] * dp;
    dp *= den;
  }
  return IntPoly(std::move(out));
}

IntPoly scale_variable(const IntPoly& p, const Integer& w) {  // p(w x)
  std::vector<Integer> out(p.coefficients().begin(), p.coefficients().end());
  Integer wp = 1;
  for (auto& c : out) {
    c *= wp;
    wp *= w;
  }
  return IntPoly(std::move(out));
}

IntPoly reversed(const IntPoly& p, std::size_t degree) {  // x^degree p(1/x)
  std::vector<Integer> out(degree + 1);
  auto cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) out[degree - i] = cs[i];
  return IntPoly(std::move(out));
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// RAII wrapper over an mpfr_t.
class Real {
 public:
  explicit Real(int bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    Integer m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rational r(m);
    return r * dyadic(static_cast<long>(e));
  }

 private:
  mpfr_t v_;
};

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

double RationalInterval::midpoint() const {
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

AlgebraicValue::AlgebraicValue(IntPoly defining, Rational lo, Rational hi, int precision_bits)
    : defining_(std::move(defining)),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      precision_bits_(precision_bits),
      lo_sign_(0) {
  if (defining_.is_zero()) throw std::invalid_argument("AlgebraicValue: zero defining polynomial");
  if (hi_ < lo_) throw std::invalid_argument("AlgebraicValue: lo > hi");
  if (lo_ == hi_) {
    if (sign_at(defining_, lo_) != 0) throw std::invalid_argument("AlgebraicValue: exact value is not a root");
    return;
  }
  lo_sign_ = sign_at(defining_, lo_);
  const int hi_sign = sign_at(defining_, hi_);
  if (lo_sign_ == 0 || hi_sign == 0 || lo_sign_ == hi_sign) {
    throw std::invalid_argument("AlgebraicValue: no strict sign change on the interval");
  }
}

AlgebraicValue AlgebraicValue::exact(IntPoly defining, const Rational& value) {
  return AlgebraicValue(std::move(defining), value, value, 0);
}

double AlgebraicValue::approx() const { return interval().midpoint(); }

AlgebraicValue AlgebraicValue::refined(int bits) const {
  if (is_exact() || bits <= precision_bits_) return *this;
  AlgebraicValue out = *this;
  while (!width_within(out.lo_, out.hi_, bits)) {
    Rational mid = (out.lo_ + out.hi_) / 2;
    const int s = sign_at(out.defining_, mid);
    if (s == 0) {
      out.lo_ = mid;
      out.hi_ = mid;
      out.lo_sign_ = 0;
      break;
    }
    if (s == out.lo_sign_) {
      out.lo_ = std::move(mid);
    } else {
      out.hi_ = std::move(mid);
    }
  }
  out.precision_bits_ = bits;
  return out;
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("cauchy_bound: constant polynomial");
  auto cs = p.coefficients();
  Integer best = 0;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) best = std::max<Integer>(best, abs(cs[i]));
  Rational ratio(best, abs(p.leading()));
  ratio.canonicalize();
  return 1 + ratio;
}

int descartes_bound(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  const auto n = static_cast<std::size_t>(p.degree());
  Integer den = lcm(lo.get_den(), hi.get_den());
  Integer l = lo.get_num() * (den / lo.get_den());
  Integer h = hi.get_num() * (den / hi.get_den());
  IntPoly r = scaled_numerator(p, den);              // roots scaled by den
  IntPoly s = scale_variable(taylor_shift(r, l), Integer(h - l));  // (lo, hi) -> (0, 1)
  IntPoly q = taylor_shift(reversed(s, n), Integer(1));            // (0, 1) -> (0, inf)
  return sign_variations(q);
}

int descartes_bound_above(const IntPoly& p, const Rational& lo) {
  if (p.degree() < 1) return 0;
  const Integer& den = lo.get_den();
  IntPoly r = scaled_numerator(p, den);
  IntPoly s = scale_variable(taylor_shift(r, lo.get_num()), den);  // p(lo + x) up to a positive factor
  return sign_variations(s);
}

namespace {

struct Cell {
  Rational lo;
  Rational hi;
  int lo_sign;  // 0 when lo is itself the root
};

// Top-down scan of `cells` equal cells on [start, top]. Returns the
// certified cell holding the largest root above 1 or nothing when the
// scan is ambiguous. `located` receives the lower end of the outermost
// sign change seen, if any.
std::optional<Cell> scan_cells(const IntPoly& p, const Rational& start, const Rational& top,
                               const Integer& cells, RootSearchTrace& trace,
                               std::optional<Rational>& located) {
  const Rational step = (top - start) / Rational(cells);
  int prev = sgn(p.leading());
  Rational upper = top;
  for (Integer j = cells - 1; j >= 0; --j) {
    Rational x = start + step * Rational(j);
    const int s = sign_at(p, x);
    ++trace.cells_evaluated;
    if (s == 0) {
      if (x <= 1) return std::nullopt;
      located = x;
      if (descartes_bound_above(p, x) == 0) return Cell{x, x, 0};
      return std::nullopt;
    }
    if (s != prev) {
      located = x;
      if (descartes_bound_above(p, upper) == 0 && descartes_bound(p, x, upper) == 1) {
        return Cell{x, upper, s};
      }
      return std::nullopt;
    }
    prev = s;
    upper = std::move(x);
  }
  return std::nullopt;
}

std::optional<Cell> isolate_top(const IntPoly& q, const Rational& lo, const Rational& hi, int depth) {
  if (depth > 4096) throw InconclusiveError("largest_real_root: Descartes bisection did not terminate");
  const int v = descartes_bound(q, lo, hi);
  if (v == 0) return std::nullopt;
  if (v == 1) {
    Rational a = lo;
    int sa = sign_at(q, a);
    // Nudge a zero left endpoint inward; the isolated root lies strictly above it.
    for (int k = 1; sa == 0 && k <= 256; ++k) {
      a = lo + (hi - lo) * dyadic(-k);
      sa = sign_at(q, a);
      if (sa != 0 && descartes_bound(q, a, hi) != 1) sa = 0;
    }
    if (sa == 0) throw InconclusiveError("largest_real_root: cannot separate root from endpoint");
    return Cell{a, hi, sa};
  }
  Rational mid = (lo + hi) / 2;
  if (auto upper = isolate_top(q, mid, hi, depth + 1)) return upper;
  if (sign_at(q, mid) == 0) return Cell{mid, mid, 0};
  return isolate_top(q, lo, mid, depth + 1);
}

}  // namespace

std::optional<AlgebraicValue> largest_real_root(const IntPoly& p, int precision_bits, RootSearchTrace* trace) {
  if (p.is_zero()) throw std::invalid_argument("largest_real_root: zero polynomial");
  if (precision_bits < 8) throw std::invalid_argument("largest_real_root: precision_bits must be >= 8");
  RootSearchTrace local;
  RootSearchTrace& tr = trace ? *trace : local;
  if (p.degree() < 1) return std::nullopt;

  const Rational one(1);
  if (descartes_bound_above(p, one) == 0) return std::nullopt;

  // Grid top: the Cauchy bound rounded up to a power of two.
  Rational bound = cauchy_bound(p);
  unsigned long e = 0;
  while (Rational(pow2(e)) < bound) ++e;
  const Rational top(pow2(e));

  auto finish = [&](const IntPoly& poly, const Cell& cell) {
    if (cell.lo_sign == 0) return AlgebraicValue::exact(poly, cell.lo);
    return AlgebraicValue(poly, cell.lo, cell.hi, 0).refined(precision_bits);
  };

  Integer cells = pow2(10);
  std::optional<Rational> located;
  if (auto cell = scan_cells(p, one, top, cells, tr, located)) return finish(p, *cell);

  // Escalate once: squared cell count over the part of the grid at or
  // above the ambiguous sign change.
  ++tr.escalations;
  const Rational coarse_step = (top - one) / Rational(cells);
  Rational start = located ? std::max<Rational>(one, *located - coarse_step) : one;
  Integer fine = cells * cells;
  Rational span_fraction = (top - start) / (top - one);
  Integer fine_cells = fine * span_fraction.get_num() / span_fraction.get_den();
  if (fine_cells < 1) fine_cells = 1;
  located.reset();
  if (auto cell = scan_cells(p, start, top, fine_cells, tr, located)) return finish(p, *cell);

  // Fall back to Descartes bisection on the squarefree part.
  tr.descartes_fallback = true;
  IntPoly sqfree = p;
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() >= 1) sqfree = divide(p, g).quotient;
  sqfree = primitive_part(sqfree);
  if (auto cell = isolate_top(sqfree, one, top, 0)) {
    if (cell->lo_sign == 0 && cell->lo <= one) return std::nullopt;
    return finish(sqfree, *cell);
  }
  return std::nullopt;
}

GraeffeSequence::GraeffeSequence(IntPoly p) : current_(normalize_sign(std::move(p))) {
  if (current_.degree() < 1) throw std::invalid_argument("GraeffeSequence: degree must be >= 1");
  if (sgn(current_.coeff(0)) == 0) throw std::invalid_argument("GraeffeSequence: zero constant term");
}

void GraeffeSequence::step() {
  auto cs = current_.coefficients();
  std::vector<Integer> even;
  std::vector<Integer> odd;
  for (std::size_t i = 0; i < cs.size(); ++i) (i % 2 == 0 ? even : odd).push_back(cs[i]);

  auto square = [](const std::vector<Integer>& a) {
    std::vector<Integer> out(a.empty() ? 0 : 2 * a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      out[2 * i] += a[i] * a[i];
      Integer twice = 2 * a[i];
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (sgn(a[j]) != 0) out[i + j] += twice * a[j];
      }
    }
    return out;
  };

  std::vector<Integer> e2 = square(even);
  std::vector<Integer> o2 = square(odd);
  std::vector<Integer> next(std::max(e2.size(), o2.size() + 1));
  for (std::size_t i = 0; i < e2.size(); ++i) next[i] += e2[i];
  for (std::size_t i = 0; i < o2.size(); ++i) next[i + 1] -= o2[i];
  current_ = normalize_sign(IntPoly(std::move(next)));
  ++iterations_;
}

std::size_t GraeffeSequence::total_bits() const {
  std::size_t bits = 0;
  for (const auto& c : current_.coefficients()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  return bits;
}

ModulusBound GraeffeSequence::bound(int working_bits) const {
  auto cs = current_.coefficients();
  const auto n = static_cast<unsigned long>(cs.size() - 1);
  const Integer lead = abs(cs[n]);

  Real lower(working_bits);
  Real upper(working_bits);
  Real term(working_bits);
  mpfr_set_zero(lower.get(), 1);
  mpfr_set_zero(upper.get(), 1);

  for (unsigned long i = 1; i <= n; ++i) {
    const Integer& c = cs[n - i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);

    // Lower: |e_i| <= C(n, i) R^i.
    Rational lo_ratio(mag, lead * binomial(n, i));
    mpfr_set_q(term.get(), lo_ratio.get_mpq_t(), MPFR_RNDD);
    mpfr_rootn_ui(term.get(), term.get(), i, MPFR_RNDD);
    mpfr_max(lower.get(), lower.get(), term.get(), MPFR_RNDD);

    // Upper (Fujiwara): R <= 2 max |c_{n-i}/c_n|^(1/i), last term halved.
    Rational up_ratio(mag, i == n ? Integer(2 * lead) : lead);
    mpfr_set_q(term.get(), up_ratio.get_mpq_t(), MPFR_RNDU);
    mpfr_rootn_ui(term.get(), term.get(), i, MPFR_RNDU);
    mpfr_max(upper.get(), upper.get(), term.get(), MPFR_RNDU);
  }
  mpfr_mul_ui(upper.get(), upper.get(), 2, MPFR_RNDU);

  for (int k = 0; k < iterations_; ++k) {
    mpfr_sqrt(lower.get(), lower.get(), MPFR_RNDD);
    mpfr_sqrt(upper.get(), upper.get(), MPFR_RNDU);
  }
  ModulusBound out;
  out.lower = lower.to_rational();
  out.upper = upper.to_rational();
  out.iterations = iterations_;
  return out;
}

ModulusBound max_root_modulus(const IntPoly& p, int precision_bits, const GraeffeOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("max_root_modulus: degree must be >= 1");
  if (sgn(p.coeff(0)) == 0) throw std::invalid_argument("max_root_modulus: zero constant term; clear the shift first");
  GraeffeSequence seq(p);
  const int working = 2 * precision_bits + 64;
  const Rational tolerance = Rational(1) + dyadic(-precision_bits);
  for (;;) {
    ModulusBound b = seq.bound(working);
    if (b.upper <= b.lower * tolerance) {
      b.converged = true;
      return b;
    }
    if (seq.iterations() >= options.max_iterations || seq.total_bits() > options.max_total_bits) return b;
    seq.step();
  }
}

std::strong_ordering compare(const AlgebraicValue& u, const AlgebraicValue& v, int max_bits) {
  if (u.is_exact() && v.is_exact()) {
    const int c = cmp(u.lo(), v.lo());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  std::optional<IntPoly> common;
  int bits = std::max({u.precision_bits(), v.precision_bits(), 8});
  for (;;) {
    AlgebraicValue a = u.refined(bits);
    AlgebraicValue b = v.refined(bits);
    if (a.hi() < b.lo()) return std::strong_ordering::less;
    if (b.hi() < a.lo()) return std::strong_ordering::greater;

    const Rational lo = std::max(a.lo(), b.lo());
    const Rational hi = std::min(a.hi(), b.hi());
    if (!common) common = gcd(u.defining(), v.defining());
    if (common->degree() >= 1) {
      const int s_lo = sign_at(*common, lo);
      const int s_hi = sign_at(*common, hi);
      if (s_lo * s_hi <= 0) return std::strong_ordering::equal;
    }
    if (bits >= max_bits) throw InconclusiveError("compare: intervals still overlap at the bit budget");
    bits = std::min(2 * bits, max_bits);
  }
}

std::string to_string(std::strong_ordering order) {
  if (order == std::strong_ordering::less) return "less";
  if (order == std::strong_ordering::greater) return "greater";
  return "equal";
}

RationalInterval power(const RationalInterval& x, unsigned long n) {
  if (x.lo <= 0) throw std::invalid_argument("power: interval must be positive");
  auto pw = [n](const Rational& q) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
    return r;
  };
  return {pw(x.lo), pw(x.hi)};
}

RationalInterval power(const AlgebraicValue& u, unsigned long n) { return power(u.interval(), n); }

RationalInterval log_enclosure(const RationalInterval& x, int working_bits) {
  if (x.lo <= 0) throw std::invalid_argument("log_enclosure: interval must be positive");
  Real lo(working_bits);
  Real hi(working_bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

RationalInterval reciprocal(const RationalInterval& x) {
  if (x.contains(Rational(0))) throw std::domain_error("reciprocal: interval contains zero");
  return {1 / x.hi, 1 / x.lo};
}

std::string floor_decimal(const Rational& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled;
  Integer num = x.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  const bool negative = sgn(scaled) < 0;
  std::string s = Integer(abs(scaled)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + s : s;
}

std::string truncate_decimal(const std::function<RationalInterval(int)>& enclose, int digits, int start_bits,
                             int max_bits) {
  for (int bits = start_bits;; bits *= 2) {
    RationalInterval x = enclose(bits);
    std::string lo = floor_decimal(x.lo, digits);
    if (lo == floor_decimal(x.hi, digits)) return lo;
    if (bits >= max_bits) throw InconclusiveError("truncate_decimal: value sits on a decimal boundary");
  }
}

std::string truncate_decimal(const AlgebraicValue& v, int digits) {
  return truncate_decimal([&v](int bits) { return v.refined(bits).interval(); }, digits,
                          std::max(v.precision_bits(), kDefaultPrecisionBits));
}

std::string round_decimal(const std::function<RationalInterval(int)>& enclose, int digits, int start_bits,
                          int max_bits) {
  Rational half(1, 2);
  for (int i = 0; i < digits; ++i) half /= 10;
  return truncate_decimal(
      [&](int bits) {
        RationalInterval x = enclose(bits);
        return RationalInterval{x.lo + half, x.hi + half};
      },
      digits, start_bits, max_bits);
}

std::string round_decimal(const AlgebraicValue& v, int digits) {
  return round_decimal([&v](int bits) { return v.refined(bits).interval(); }, digits,
                       std::max(v.precision_bits(), kDefaultPrecisionBits));
}

}  // namespace sbraid
