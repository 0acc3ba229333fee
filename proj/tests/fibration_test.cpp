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

#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sbraid {
namespace {

using Ints = std::vector<int>;

TEST(Cone, Membership) {
  EXPECT_TRUE(is_primitive_in_cone({1, 2}));
  EXPECT_FALSE(is_primitive_in_cone({2, 4}));
  EXPECT_FALSE(is_primitive_in_cone({3, 2}));
  EXPECT_FALSE(is_primitive_in_cone({0, 0}));
  EXPECT_FALSE(is_primitive_in_cone({1, -2}));
  EXPECT_FALSE(is_primitive_in_cone({-2, 2}));
  EXPECT_TRUE(is_primitive_in_cone({-3, 4}));
  EXPECT_TRUE(cone_violation({1, 2}).empty());
  EXPECT_FALSE(cone_violation({2, 4}).empty());
  for (int b = -3; b <= 30; ++b) {
    for (int a = -32; a <= 32; ++a) {
      EXPECT_EQ(is_primitive_in_cone({a, b}), oracle::primitive_in_cone(a, b)) << a << "," << b;
    }
  }
}

TEST(Cone, RejectionMessage) {
  try {
    genus({2, 4});
    FAIL() << "expected NotPrimitiveError";
  } catch (const NotPrimitiveError& e) {
    EXPECT_NE(std::string(e.what()).find("not a primitive class in the fibered cone"), std::string::npos);
  }
  EXPECT_THROW(prong_type({5, 3}), std::invalid_argument);
  EXPECT_THROW(dilatation({0, 2}), NotPrimitiveError);
}

TEST(Invariants, NormGenusBoundary) {
  EXPECT_EQ(thurston_norm({1, 2}), 4);
  EXPECT_EQ(thurston_norm({0, 1}), 2);
  EXPECT_EQ(thurston_norm({-3, 4}), 8);
  EXPECT_EQ(genus({0, 1}), 0);
  EXPECT_EQ(genus({1, 2}), 2);
  EXPECT_EQ(genus({3, 4}), 3);
  EXPECT_EQ(boundary_components({1, 2}), std::make_pair(1, 1));
  EXPECT_EQ(boundary_components({0, 1}), std::make_pair(3, 1));
  EXPECT_EQ(boundary_components({1, 3}), std::make_pair(1, 3));
}

TEST(Invariants, GenusAgreesWithEulerCharacteristic) {
  for (int b = 1; b <= 200; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      if (!oracle::primitive_in_cone(a, b)) continue;
      EXPECT_EQ(genus({a, b}), oracle::genus_from_euler(a, b)) << a << "," << b;
    }
  }
}

TEST(Prongs, WorkedExamples) {
  EXPECT_EQ(prong_type({1, 2}), (Ints{6, 2}));
  EXPECT_EQ(prong_type({3, 4}), (Ints{4, 4, 4, 4}));
  EXPECT_EQ(prong_type({1, 3}), (Ints{9, 1, 1, 1}));
  EXPECT_EQ(singularity_degrees({1, 2}), (Ints{4}));
  EXPECT_EQ(singularity_degrees({1, 6}), (Ints{16}));
  EXPECT_EQ(singularity_degrees({1, 9}), (Ints{25, 1, 1, 1}));
  EXPECT_EQ(singularity_degrees({1, 3}), (Ints{7, -1, -1, -1}));
}

TEST(Prongs, PoincareHopfAndExtendability) {
  for (int b = 1; b <= 200; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      const CohomClass c{a, b};
      if (!is_primitive_in_cone(c)) continue;
      const Ints p = prong_type(c);
      const int euler = std::accumulate(p.begin(), p.end(), 0, [](int s, int n) { return s + n - 2; });
      EXPECT_EQ(euler, 4 * genus(c) - 4);
      const auto [k1, k2] = boundary_components(c);
      EXPECT_EQ(2 * b, 2 * genus(c) - 2 + k1 + k2);
      EXPECT_EQ(static_cast<int>(p.size()), k1 + k2);
      EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
      EXPECT_EQ(is_extendable(c), std::find(p.begin(), p.end(), 1) == p.end());
    }
  }
  for (CohomClass c : {CohomClass{0, 1}, {1, 3}, {-1, 3}, {2, 3}, {-2, 3}}) EXPECT_FALSE(is_extendable(c));
  EXPECT_TRUE(is_extendable({1, 2}));
}

TEST(Orientability, ParityRule) {
  EXPECT_TRUE(is_orientable({1, 2}));
  EXPECT_FALSE(is_orientable({1, 3}));
  EXPECT_FALSE(is_orientable({0, 1}));
  EXPECT_TRUE(is_orientable({1, 6}));
  EXPECT_TRUE(is_orientable({-3, 8}));
}

TEST(Specializations, ChoHamAndLehmerShapes) {
  EXPECT_EQ(teichmuller_specialization({1, 2}), IntPoly({1, -1, -1, -1, 1}));
  EXPECT_EQ(alexander_specialization({1, 2}), IntPoly({1, 1, -1, 1, 1}));
  EXPECT_EQ(teichmuller_specialization({0, 1}), IntPoly({1, -3, 1}));
  EXPECT_EQ(alexander_specialization({0, 1}), IntPoly({1, 1, 1}));
}

TEST(Specializations, ValuesMatchDirectFormula) {
  for (int b = 1; b <= 12; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      if (!is_primitive_in_cone({a, b})) continue;
      const IntPoly theta = teichmuller_specialization({a, b});
      const IntPoly delta = alexander_specialization({a, b});
      EXPECT_EQ(theta.degree(), 2 * b);
      for (long double t : {1.1L, 1.7L, 2.3L}) {
        // |a| < b keeps every exponent in [0, 2b], so clearing shifts nothing.
        const long double scale = 1.0L;
        EXPECT_NEAR(static_cast<long double>(eval_rational(theta, Rational(static_cast<double>(t))).get_d()),
                    oracle::theta(t, a, b) * scale, 1e-6L * std::fabs(oracle::theta(t, a, b) * scale) + 1e-9L);
        EXPECT_NEAR(static_cast<long double>(eval_rational(delta, Rational(static_cast<double>(t))).get_d()),
                    oracle::delta(t, a, b) * scale, 1e-6L * std::fabs(oracle::delta(t, a, b) * scale) + 1e-9L);
      }
    }
  }
}

TEST(Specializations, OrientableNegationIdentity) {
  for (int b = 1; b <= 100; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      const CohomClass c{a, b};
      if (!is_primitive_in_cone(c)) continue;
      const bool identity = alexander_specialization(c) == negate_variable(teichmuller_specialization(c));
      EXPECT_EQ(identity, is_orientable(c)) << a << "," << b;
    }
  }
}

TEST(Dilatation, AgreesWithFloatingOracle) {
  for (int b = 1; b <= 40; ++b) {
    for (int a = 0; a < b; ++a) {
      if (!is_primitive_in_cone({a, b})) continue;
      const AlgebraicValue v = dilatation({a, b});
      const long double expect = oracle::dilatation(a, b);
      EXPECT_NEAR(v.approx(), static_cast<double>(expect), 1e-12) << a << "," << b;
      EXPECT_LE(v.width(), Rational(Integer(1), Integer(1) << 60));
    }
  }
}

TEST(Dilatation, ReferenceValues) {
  EXPECT_EQ(round_decimal(dilatation({0, 1}), 5), "2.61803");
  EXPECT_EQ(round_decimal(dilatation({1, 2}), 5), "1.72208");
  EXPECT_EQ(round_decimal(dilatation({3, 8}), 5), "1.13694");
}

TEST(Dilatation, MirrorSymmetry) {
  for (int b = 2; b <= 30; ++b) {
    for (int a = 1; a < b; ++a) {
      if (!is_primitive_in_cone({a, b})) continue;
      EXPECT_EQ(teichmuller_specialization({a, b}), teichmuller_specialization({-a, b}));
      EXPECT_EQ(compare(dilatation({a, b}), dilatation({-a, b})), std::strong_ordering::equal);
    }
  }
}

TEST(Dilatation, MonotoneInSlopeAlongEachSlice) {
  // lambda_(a,b) grows with |a| for fixed b (1/log lambda is concave and even in a).
  for (int b = 2; b <= 30; ++b) {
    std::optional<AlgebraicValue> prev;
    for (int a = 0; a < b; ++a) {
      if (!is_primitive_in_cone({a, b})) continue;
      AlgebraicValue v = dilatation({a, b});
      if (prev) {
        EXPECT_EQ(compare(v, *prev), std::strong_ordering::greater) << a << "," << b;
      }
      prev = v;
    }
  }
}

TEST(HomologicalDilatation, EqualForOrientableClass) {
  const ModulusBound h = homological_dilatation({1, 2});
  const AlgebraicValue l = dilatation({1, 2});
  EXPECT_LE(h.lower, l.hi());
  EXPECT_GE(h.upper, l.lo());
}

TEST(HomologicalDilatation, StrictlyBelowForOddB) {
  const ModulusBound h = homological_dilatation({1, 3});
  EXPECT_LT(h.upper, dilatation({1, 3}).lo());
  const ModulusBound h01 = homological_dilatation({0, 1});  // t^2 + t + 1: modulus 1
  EXPECT_LE(h01.lower, 1);
  EXPECT_GE(h01.upper, 1);
  EXPECT_LT(h01.upper, dilatation({0, 1}).lo());
}

TEST(FiberSummary, ReferenceRows) {
  const FiberData f = fiber_summary({1, 8});
  EXPECT_EQ(f.genus, 8);
  EXPECT_EQ(f.thurston_norm, 16);
  EXPECT_EQ(f.boundary_from_k1, 1);
  EXPECT_EQ(f.boundary_from_k2, 1);
  EXPECT_EQ(f.prongs, (Ints{24, 8}));
  EXPECT_EQ(f.degrees, (Ints{22, 6}));
  EXPECT_TRUE(f.orientable);

  const FiberData g = fiber_summary({3, 7});
  EXPECT_EQ(g.genus, 6);
  EXPECT_EQ(g.prongs, (Ints{7, 7, 7, 7}));
  EXPECT_EQ(g.degrees, (Ints{5, 5, 5, 5}));
  EXPECT_FALSE(g.orientable);

  EXPECT_EQ(fiber_summary({1, 12}).degrees, (Ints{34, 2, 2, 2}));
  EXPECT_EQ(fiber_summary({1, 12}).genus, 11);
  EXPECT_EQ(fiber_summary({0, 1}).boundary_total(), 4);
}

}  // namespace
}  // namespace sbraid
