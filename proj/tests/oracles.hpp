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

// Independent reference computations for the tests. Nothing here calls
// into the library's polynomial or root-finding code.

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Theta(t^a, t^b) * t^|a| evaluated in long double, i.e.
// t^(2b) - t^b (1 + t^a + t^-a) + 1 without clearing anything.
inline long double theta(long double t, int a, int b) {
  const long double tb = std::pow(t, static_cast<long double>(b));
  const long double ta = std::pow(t, static_cast<long double>(a));
  return tb * tb - tb * (1.0L + ta + 1.0L / ta) + 1.0L;
}

inline long double delta(long double t, int a, int b) {
  const long double tb = std::pow(t, static_cast<long double>(b));
  const long double ta = std::pow(t, static_cast<long double>(a));
  return tb * tb - tb * (1.0L - ta - 1.0L / ta) + 1.0L;
}

// Largest root above 1 of Theta at (a, b): Theta -> +inf, so scan down
// from 4 in small steps to the first sign change, then bisect.
inline long double dilatation(int a, int b) {
  const long double step = 1e-4L;
  long double hi = 4.0L;
  while (theta(hi - step, a, b) > 0) hi -= step;
  long double lo = hi - step;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (theta(mid, a, b) > 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

// Exact rational evaluation of an ascending coefficient list.
inline mpq_class horner(const std::vector<long>& ascending, const mpq_class& t) {
  mpq_class acc = 0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline mpq_class qpow(const mpq_class& t, long e) {
  mpq_class r = 1;
  const mpq_class base = e < 0 ? mpq_class(1 / t) : t;
  for (long i = 0; i < std::labs(e); ++i) r *= base;
  return r;
}

// Genus from the Euler characteristic of the fiber (-norm) and its
// boundary count, by brute force over the cone rather than by formula.
inline int genus_from_euler(int a, int b) {
  const int norm = 2 * std::max(std::abs(a), std::abs(b));
  const int boundary = std::gcd(3, std::abs(a)) + std::gcd(3, b);
  // chi = 2 - 2g - boundary = -norm
  return (norm + 2 - boundary) / 2;
}

inline bool primitive_in_cone(int a, int b) { return b > 0 && -b < a && a < b && std::gcd(std::abs(a), b) == 1; }

}  // namespace oracle
