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

#include "sbraid/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sbraid {

namespace {

const Integer& zero_integer() {
  static const Integer zero = 0;
  return zero;
}

// Exponents beyond this would allocate absurd dense vectors.
constexpr std::int64_t kMaxDenseDegree = std::int64_t{1} << 26;

}  // namespace

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

const Integer& IntPoly::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

std::size_t IntPoly::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string IntPoly::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

BivariateLaurent::BivariateLaurent(std::initializer_list<Term> terms) {
  for (const auto& t : terms) add_term(t.x_exp, t.u_exp, Integer(t.coeff));
}

void BivariateLaurent::add_term(std::int64_t x_exp, std::int64_t u_exp, const Integer& c) {
  if (sgn(c) == 0) return;
  auto key = std::make_pair(x_exp, u_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivariateLaurent operator*(const BivariateLaurent& lhs, const BivariateLaurent& rhs) {
  BivariateLaurent out;
  for (const auto& [k1, c1] : lhs.terms_) {
    for (const auto& [k2, c2] : rhs.terms_) {
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    }
  }
  return out;
}

LaurentPoly specialize(const BivariateLaurent& p, std::int64_t a, std::int64_t b) {
  std::map<std::int64_t, Integer> collected;
  for (const auto& [key, c] : p.terms()) collected[key.first * a + key.second * b] += c;
  std::erase_if(collected, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (collected.empty()) return {};
  const std::int64_t low = collected.begin()->first;
  const std::int64_t high = collected.rbegin()->first;
  if (high - low > kMaxDenseDegree) throw std::length_error("specialize: exponent span too large");
  std::vector<Integer> body(static_cast<std::size_t>(high - low + 1));
  for (auto& [e, c] : collected) body[static_cast<std::size_t>(e - low)] = std::move(c);
  return {low, IntPoly(std::move(body))};
}

IntPoly clear_shift(const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("clear_shift: zero polynomial");
  auto cs = q.body.coefficients();
  std::size_t low = 0;
  while (sgn(cs[low]) == 0) ++low;
  return normalize_sign(IntPoly(std::vector<Integer>(cs.begin() + static_cast<std::ptrdiff_t>(low), cs.end())));
}

IntPoly normalize_sign(IntPoly p) {
  if (!p.is_zero() && sgn(p.leading()) < 0) p *= Integer(-1);
  return p;
}

IntPoly negate_variable(const IntPoly& p) {
  std::vector<Integer> out(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return normalize_sign(IntPoly(std::move(out)));
}

bool is_reciprocal(const IntPoly& p) {
  auto cs = p.coefficients();
  const std::size_t n = cs.size();
  bool same = true;
  bool opposite = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& lo = cs[i];
    const Integer& hi = cs[n - 1 - i];
    if (lo != hi) same = false;
    if (lo != -hi) opposite = false;
  }
  return same || opposite;
}

namespace {

// r -= c * t^shift * d
void subtract_shifted(std::vector<Integer>& r, const Integer& c, std::size_t shift, const IntPoly& d) {
  auto dc = d.coefficients();
  for (std::size_t i = 0; i < dc.size(); ++i) r[i + shift] -= c * dc[i];
}

void pop_zeros(std::vector<Integer>& r) {
  while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
}

}  // namespace

Division divide(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::domain_error("divide: division by the zero polynomial");
  if (p.degree() < d.degree()) return {IntPoly{}, p, false, 1};

  const auto dd = static_cast<std::size_t>(d.degree());
  const Integer& lead = d.leading();

  // Exact attempt: every leading coefficient must be divisible by lc(d).
  {
    std::vector<Integer> r(p.coefficients().begin(), p.coefficients().end());
    std::vector<Integer> q(r.size() - dd);
    bool exact = true;
    while (r.size() > dd) {
      const Integer& top = r.back();
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
        exact = false;
        break;
      }
      Integer c = top / lead;
      const std::size_t shift = r.size() - 1 - dd;
      q[shift] = c;
      subtract_shifted(r, c, shift, d);
      pop_zeros(r);
    }
    if (exact) return {IntPoly(std::move(q)), IntPoly(std::move(r)), false, 1};
  }

  // Integer pseudo-division: lc(d)^(deg p - deg d + 1) * p = q * d + r.
  std::vector<Integer> r(p.coefficients().begin(), p.coefficients().end());
  std::vector<Integer> q(r.size() - dd);
  unsigned long steps_left = static_cast<unsigned long>(p.degree() - d.degree() + 1);
  const unsigned long total = steps_left;
  while (r.size() > dd) {
    Integer top = r.back();
    const std::size_t shift = r.size() - 1 - dd;
    for (auto& c : q) c *= lead;
    q[shift] += top;
    for (auto& c : r) c *= lead;
    subtract_shifted(r, top, shift, d);
    pop_zeros(r);
    --steps_left;
  }
  Integer rest;
  mpz_pow_ui(rest.get_mpz_t(), lead.get_mpz_t(), steps_left);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), total);
  IntPoly quotient(std::move(q));
  IntPoly remainder(std::move(r));
  quotient *= rest;
  remainder *= rest;
  return {std::move(quotient), std::move(remainder), true, scale};
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d) {
  Division div = divide(p, d);
  if (div.pseudo || p.degree() < d.degree()) return div.remainder;
  // Exact division succeeded; scale up to the pseudo-remainder convention.
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), d.leading().get_mpz_t(),
             static_cast<unsigned long>(p.degree() - d.degree() + 1));
  return div.remainder * scale;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  std::vector<Integer> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return normalize_sign(IntPoly(std::move(out)));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational eval_rational(const IntPoly& p, const Rational& q) {
  Rational v = 0;
  auto cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    v *= q;
    v += *it;
  }
  return v;
}

namespace {

// Denominator exponent m when den == 2^m, otherwise -1.
long dyadic_exponent(const Integer& den) {
  if (den <= 0) return -1;
  const mp_bitcnt_t low = mpz_scan1(den.get_mpz_t(), 0);
  if (mpz_sizeinbase(den.get_mpz_t(), 2) != low + 1) return -1;
  return static_cast<long>(low);
}

}  // namespace

int sign_at(const IntPoly& p, const Rational& q) {
  if (p.is_zero()) return 0;
  auto cs = p.coefficients();
  const std::size_t n = cs.size() - 1;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  const long m = dyadic_exponent(den);

  // value * den^n = sum c_i num^i den^(n-i); den^n > 0 keeps the sign.
  Integer acc = 0;
  if (m >= 0 && p.term_count() * 8 <= n) {
    Integer power = 1;  // num^i
    std::size_t at = 0;
    Integer term;
    for (std::size_t i = 0; i <= n; ++i) {
      if (sgn(cs[i]) == 0) continue;
      if (i > at) {
        Integer step;
        mpz_pow_ui(step.get_mpz_t(), num.get_mpz_t(), i - at);
        power *= step;
        at = i;
      }
      term = cs[i] * power;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(m) * (n - i));
      acc += term;
    }
    return sgn(acc);
  }

  if (m >= 0) {
    Integer shifted;
    acc = cs[n];
    for (std::size_t i = n; i-- > 0;) {
      acc *= num;
      if (sgn(cs[i]) != 0) {
        mpz_mul_2exp(shifted.get_mpz_t(), cs[i].get_mpz_t(), static_cast<mp_bitcnt_t>(m) * (n - i));
        acc += shifted;
      }
    }
    return sgn(acc);
  }

  Integer den_power = 1;
  acc = cs[n];
  for (std::size_t i = n; i-- > 0;) {
    acc *= num;
    den_power *= den;
    if (sgn(cs[i]) != 0) acc += cs[i] * den_power;
  }
  return sgn(acc);
}

IntPoly taylor_shift(const IntPoly& p, const Integer& s) {
  std::vector<Integer> a(p.coefficients().begin(), p.coefficients().end());
  const std::size_t n = a.size();
  if (n <= 1 || sgn(s) == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += s * a[j + 1];
  }
  return IntPoly(std::move(a));
}

int sign_variations(const IntPoly& p) {
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace sbraid
