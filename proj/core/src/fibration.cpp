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

#include "sbraid/fibration.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace sbraid {

namespace {

int gcd3(int v) { return std::gcd(3, std::abs(v)); }

void require_primitive(const CohomClass& c) {
  if (!is_primitive_in_cone(c)) throw NotPrimitiveError(c);
}

}  // namespace

std::string to_string(const CohomClass& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

NotPrimitiveError::NotPrimitiveError(const CohomClass& c)
    : std::invalid_argument("not a primitive class in the fibered cone: " + to_string(c) + " (" +
                            cone_violation(c) + ")") {}

const BivariateLaurent& alexander_polynomial() {
  // u^2 - u + x u + x^-1 u + 1
  static const BivariateLaurent poly{{0, 2, 1}, {0, 1, -1}, {1, 1, 1}, {-1, 1, 1}, {0, 0, 1}};
  return poly;
}

const BivariateLaurent& teichmuller_polynomial() {
  // u^2 - u - x u - x^-1 u + 1
  static const BivariateLaurent poly{{0, 2, 1}, {0, 1, -1}, {1, 1, -1}, {-1, 1, -1}, {0, 0, 1}};
  return poly;
}

std::string cone_violation(const CohomClass& c) {
  if (c.b <= 0) return "b must be positive";
  if (c.a <= -c.b || c.a >= c.b) return "need -b < a < b";
  if (std::gcd(c.a, c.b) != 1) return "gcd(a,b) must be 1";
  return {};
}

bool is_primitive_in_cone(const CohomClass& c) { return cone_violation(c).empty(); }

int thurston_norm(const CohomClass& c) { return std::max(2 * std::abs(c.a), 2 * std::abs(c.b)); }

int genus(const CohomClass& c) {
  require_primitive(c);
  return c.b + 1 - (gcd3(c.a) + gcd3(c.b)) / 2;
}

std::pair<int, int> boundary_components(const CohomClass& c) {
  require_primitive(c);
  return {gcd3(c.a), gcd3(c.b)};
}

std::vector<int> prong_type(const CohomClass& c) {
  require_primitive(c);
  // gcd(3,a) components from K1 with 3b/gcd(3,a) prongs each, gcd(3,b)
  // components from K2 with b/gcd(3,b) prongs each.
  const int m1 = gcd3(c.a);
  const int m2 = gcd3(c.b);
  std::vector<int> prongs;
  prongs.insert(prongs.end(), static_cast<std::size_t>(m1), 3 * c.b / m1);
  prongs.insert(prongs.end(), static_cast<std::size_t>(m2), c.b / m2);
  std::sort(prongs.begin(), prongs.end(), std::greater<>());
  return prongs;
}

std::vector<int> singularity_degrees(const CohomClass& c) {
  std::vector<int> degrees;
  for (int n : prong_type(c)) {
    if (n != 2) degrees.push_back(n - 2);
  }
  return degrees;
}

bool is_orientable(const CohomClass& c) {
  require_primitive(c);
  return c.a % 2 != 0 && c.b % 2 == 0;
}

bool is_extendable(const CohomClass& c) {
  auto prongs = prong_type(c);
  return std::find(prongs.begin(), prongs.end(), 1) == prongs.end();
}

IntPoly teichmuller_specialization(const CohomClass& c) {
  return clear_shift(specialize(teichmuller_polynomial(), c.a, c.b));
}

IntPoly alexander_specialization(const CohomClass& c) {
  return clear_shift(specialize(alexander_polynomial(), c.a, c.b));
}

AlgebraicValue dilatation(const CohomClass& c, int precision_bits) {
  require_primitive(c);
  auto root = largest_real_root(teichmuller_specialization(c), precision_bits);
  // Every class in the cone has a pseudo-Anosov monodromy.
  if (!root) throw std::logic_error("dilatation: no real root above 1 for " + to_string(c));
  return *std::move(root);
}

ModulusBound homological_dilatation(const CohomClass& c, int precision_bits, const GraeffeOptions& options) {
  require_primitive(c);
  return max_root_modulus(alexander_specialization(c), precision_bits, options);
}

FiberData fiber_summary(const CohomClass& c, int precision_bits) {
  require_primitive(c);
  auto [k1, k2] = boundary_components(c);
  return FiberData{
      .cls = c,
      .thurston_norm = thurston_norm(c),
      .genus = genus(c),
      .boundary_from_k1 = k1,
      .boundary_from_k2 = k2,
      .prongs = prong_type(c),
      .degrees = singularity_degrees(c),
      .orientable = is_orientable(c),
      .extendable = is_extendable(c),
      .dilatation = dilatation(c, precision_bits),
  };
}

}  // namespace sbraid
