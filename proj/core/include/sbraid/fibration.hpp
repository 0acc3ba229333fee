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

/// \file fibration.hpp
/// Invariants of the fibrations psi_(a,b) of the complement of the 6^2_2
/// link, the mapping torus of the braid sigma_1 sigma_2^-1. A class
/// (a, b) is a first cohomology class; the fibered cone is b > 0,
/// -b < a < b, and primitive classes additionally have gcd(a, b) = 1.

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbraid/algebraic.hpp"
#include "sbraid/laurent.hpp"

namespace sbraid {

struct CohomClass {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const CohomClass&, const CohomClass&) = default;
};

std::string to_string(const CohomClass& c);

/// Raised when an operation needs a primitive class in the fibered cone.
class NotPrimitiveError : public std::invalid_argument {
 public:
  explicit NotPrimitiveError(const CohomClass& c);
};

/// Alexander polynomial u^2 - u(1 - x - x^-1) + 1.
const BivariateLaurent& alexander_polynomial();
/// Teichmueller polynomial u^2 - u(1 + x + x^-1) + 1.
const BivariateLaurent& teichmuller_polynomial();

bool is_primitive_in_cone(const CohomClass& c);

/// Empty when primitive; otherwise which of the cone conditions fails.
std::string cone_violation(const CohomClass& c);

/// max(2|a|, 2|b|).
int thurston_norm(const CohomClass& c);

int genus(const CohomClass& c);

/// Boundary components coming from K1 and from K2: (gcd(3,a), gcd(3,b)).
std::pair<int, int> boundary_components(const CohomClass& c);

/// Prong counts at the boundary components, sorted descending.
std::vector<int> prong_type(const CohomClass& c);

/// { n - 2 : n in prong_type, n != 2 }, sorted descending.
std::vector<int> singularity_degrees(const CohomClass& c);

/// a odd and b even.
bool is_orientable(const CohomClass& c);

/// No boundary component is 1-pronged, so the monodromy extends over the
/// capped-off surface with the same dilatation.
bool is_extendable(const CohomClass& c);

/// Teichmueller polynomial specialized at (a, b), shift cleared.
IntPoly teichmuller_specialization(const CohomClass& c);
/// Alexander polynomial specialized at (a, b), shift cleared.
IntPoly alexander_specialization(const CohomClass& c);

/// Geometric dilatation: the largest real root of the Teichmueller
/// specialization.
AlgebraicValue dilatation(const CohomClass& c, int precision_bits = kDefaultPrecisionBits);

/// Homological dilatation: the maximum root modulus of the Alexander
/// specialization, enclosed by Graeffe squaring.
ModulusBound homological_dilatation(const CohomClass& c, int precision_bits = kDefaultPrecisionBits,
                                    const GraeffeOptions& options = {});

struct FiberData {
  CohomClass cls;
  int thurston_norm = 0;
  int genus = 0;
  int boundary_from_k1 = 0;
  int boundary_from_k2 = 0;
  std::vector<int> prongs;
  std::vector<int> degrees;
  bool orientable = false;
  bool extendable = false;
  AlgebraicValue dilatation;

  int boundary_total() const { return boundary_from_k1 + boundary_from_k2; }
};

FiberData fiber_summary(const CohomClass& c, int precision_bits = kDefaultPrecisionBits);

}  // namespace sbraid
