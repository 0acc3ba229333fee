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

/// \file analysis.hpp
/// Certified checks of the comparison results for the cone minima: the
/// lambda_(1,b) versus lambda_(3,b+1) comparison and chain, the golden-mean
/// limit of lambda_(a,n)^n, normalized dilatations, a concavity probe of
/// Fried's function, and the Lehmer and Cho-Ham identities.
///
/// A report passes only when every instance is certified: intervals
/// separated, or equality certified through a polynomial gcd. Witness
/// strings never carry precision-dependent digits, so a passing report
/// reproduces verbatim at higher precision.

#include <string>
#include <vector>

#include "sbraid/algebraic.hpp"
#include "sbraid/fibration.hpp"

namespace sbraid {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct Witness {
  std::string input;
  std::string outcome;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string name;
  std::string range;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Multi-line human-readable rendering.
std::string to_text(const VerificationReport& report);

struct AnalysisOptions {
  int precision_bits = kDefaultPrecisionBits;
  unsigned jobs = 1;
};

/// lambda_(1,b) > lambda_(3,b+1) for 4 <= b <= b_max, equality at b = 3.
/// Values of b with 3 | b+1 are skipped: (3, b+1) is not primitive there.
VerificationReport verify_compare_b(int b_max, const AnalysisOptions& options = {});

/// lambda_(1,b) > lambda_(3,b+1) > lambda_(1,b+1) for 4 <= b <= b_max,
/// skipping b where (3, b+1) is not primitive.
VerificationReport verify_chain(int b_max, const AnalysisOptions& options = {});

struct LimitPoint {
  int n = 0;
  RationalInterval power;  // lambda_(a,n)^n
  RationalInterval gap;    // |lambda_(a,n)^n - (3 + sqrt 5)/2|
};

/// Enclosure of (3 + sqrt 5)/2, the dilatation of the (0,1) fibration.
AlgebraicValue golden_square(int precision_bits = kDefaultPrecisionBits);

/// Enclosures of lambda_(a,n)^n, each of width at most 2^-width_bits, for
/// every n <= n_max with (a, n) primitive in the cone.
std::vector<LimitPoint> limit_sequence(int a, int n_max, int precision_bits = kDefaultPrecisionBits,
                                       int width_bits = 20, unsigned jobs = 1);

/// The certified gap to (3 + sqrt 5)/2 at a = 1, n = 200 is at most
/// 2.7113e-5; rounded up and frozen as the acceptance tolerance.
inline constexpr double kLimitGapTolerance = 3.0e-5;

/// For a = 1: gaps strictly decrease over n in [10, n_max], the gap at n_max
/// is below the gap at n = 20 and below `tolerance`.
VerificationReport verify_limit(int a, int n_max, double tolerance, const AnalysisOptions& options = {});

/// lambda_(a,b)^(Thurston norm) = lambda_(a,b)^(2b) on the cone.
RationalInterval normalized_dilatation(const CohomClass& c, int precision_bits = kDefaultPrecisionBits);

/// Midpoint concavity of y(a) = 1/(b log lambda_(a,b)) along the slice at
/// fixed b, plus strict decrease of y in |a|. Tolerance 2^(-bits/2).
VerificationReport fried_concavity_probe(int b, int precision_bits = kDefaultPrecisionBits);

/// t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1.
IntPoly lehmer_polynomial();

/// t^4 - t^3 - t^2 - t + 1.
IntPoly cho_ham_polynomial();

VerificationReport verify_lehmer();
VerificationReport verify_choham();

/// d_g < d_g^+ within the cone for g = 4 and 8; g = 6 has no orientable
/// class in the cone and is reported as deferred.
VerificationReport verify_strict_inequality_corollary(const AnalysisOptions& options = {});

/// sum(n_i - 2) = 4g - 4 and 2b = 2g - 2 + gcd(3,a) + gcd(3,b) for all
/// primitive cone classes with b <= b_max; also checks that extendability
/// matches the exceptional list (0,1), (+-1,3), (+-2,3).
VerificationReport verify_poincare_hopf(int b_max);

/// Graeffe-squares the Alexander specialization until its modulus bound
/// drops below the lower end of the geometric dilatation. Returns the
/// certifying bound, or nothing when the budget runs out first.
std::optional<ModulusBound> certify_homological_below(const CohomClass& c,
                                                      int precision_bits = kDefaultPrecisionBits,
                                                      const GraeffeOptions& options = {});

/// Parity predicate versus the polynomial identity Delta(t) = Theta(-t)
/// for b <= identity_b_max, and certified lambda_hom < lambda for odd
/// b <= strict_b_max.
VerificationReport verify_orientability(int identity_b_max, int strict_b_max, const AnalysisOptions& options = {});

}  // namespace sbraid
