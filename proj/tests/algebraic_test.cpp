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

#include <cmath>

#include <gtest/gtest.h>

namespace sbraid {
namespace {

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

// (t - r1)(t - r2)... with rational roots, cleared to integers.
IntPoly from_roots(const std::vector<Rational>& roots) {
  IntPoly p{1};
  for (const Rational& r : roots) {
    std::vector<Integer> lin{-Integer(r.get_num()), Integer(r.get_den())};
    p = p * IntPoly(std::move(lin));
  }
  return p;
}

TEST(LargestRealRoot, GoldenRatio) {
  const auto phi = largest_real_root(IntPoly{-1, -1, 1}, 80);
  ASSERT_TRUE(phi);
  EXPECT_LE(phi->width(), pow2(-80));
  const double expected = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(phi->approx(), expected, 1e-15);
  EXPECT_LT(sign_at(phi->defining(), phi->lo()) * sign_at(phi->defining(), phi->hi()), 0);
}

TEST(LargestRealRoot, NoneAboveOne) {
  EXPECT_FALSE(largest_real_root(IntPoly{1, 0, 1}));        // t^2 + 1
  EXPECT_FALSE(largest_real_root(IntPoly{-1, 1}));          // root exactly 1
  EXPECT_FALSE(largest_real_root(IntPoly{1, -3, 2}));       // roots 1/2, 1
  EXPECT_THROW(largest_real_root(IntPoly{}), std::invalid_argument);
  EXPECT_THROW(largest_real_root(IntPoly{-2, 1}, 4), std::invalid_argument);
}

TEST(LargestRealRoot, RationalRootIsFound) {
  const auto r = largest_real_root(IntPoly{-3, 2}, 40);  // 3/2
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->interval().contains(Rational(3, 2)));
}

TEST(LargestRealRoot, ClosePairEscalatesAndStaysCorrect) {
  // Roots 1.5 and 1.5001 share a grid cell of the first scan.
  const IntPoly p = from_roots({Rational(3, 2), Rational(15001, 10000), Rational(6, 5)});
  RootSearchTrace trace;
  const auto r = largest_real_root(p, 60, &trace);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->interval().contains(Rational(15001, 10000)));
  EXPECT_FALSE(r->interval().contains(Rational(3, 2)));
  EXPECT_GE(trace.escalations, 1);
}

TEST(LargestRealRoot, NearDoubleRootFallsBackToDescartes) {
  // Roots 2 and 2 + 2^-40: no uniform grid separates them cheaply.
  const Rational close = 2 + pow2(-40);
  const IntPoly p = from_roots({Rational(2), close});
  RootSearchTrace trace;
  const auto r = largest_real_root(p, 60, &trace);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->interval().contains(close));
  EXPECT_FALSE(r->interval().contains(Rational(2)));
  EXPECT_TRUE(trace.descartes_fallback);
}

TEST(LargestRealRoot, RepeatedRoot) {
  const IntPoly p = from_roots({Rational(7, 4), Rational(7, 4), Rational(5, 4)});
  const auto r = largest_real_root(p, 50);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->interval().contains(Rational(7, 4)));
}

TEST(AlgebraicValue, RefinementIsNested) {
  const auto r = *largest_real_root(IntPoly{1, -1, -1, -1, 1}, 20);
  auto prev = r;
  for (int bits : {30, 45, 90, 200}) {
    const auto next = prev.refined(bits);
    EXPECT_TRUE(prev.interval().contains(next.interval()));
    EXPECT_LE(next.width(), pow2(-bits));
    prev = next;
  }
  // Never coarsens.
  EXPECT_EQ(prev.refined(10).interval().lo, prev.lo());
}

TEST(AlgebraicValue, RejectsBadIsolation) {
  EXPECT_THROW(AlgebraicValue(IntPoly{-2, 0, 1}, Rational(2), Rational(3), 60), std::invalid_argument);
}

TEST(Bounds, CauchyAndDescartes) {
  const IntPoly p{1, -1, -1, -1, 1};
  EXPECT_EQ(cauchy_bound(p), 2);
  EXPECT_THROW(cauchy_bound(IntPoly{3}), std::invalid_argument);
  EXPECT_EQ(descartes_bound(p, Rational(1), Rational(2)), 1);
  EXPECT_EQ(descartes_bound_above(p, Rational(2)), 0);
  EXPECT_EQ(descartes_bound_above(from_roots({Rational(3), Rational(4)}), Rational(1)), 2);
}

TEST(Graeffe, UnitCircleRoots) {
  const ModulusBound m = max_root_modulus(IntPoly{1, 0, 1}, 40);  // t^2 + 1
  EXPECT_LE(m.lower, 1);
  EXPECT_GE(m.upper, 1);
  EXPECT_TRUE(m.converged);
}

TEST(Graeffe, SalemLikeQuartic) {
  // t^4 + t^3 - t^2 + t + 1 = Theta(-t) at (1,2); its house is the
  // largest real root of t^4 - t^3 - t^2 - t + 1.
  const IntPoly p{1, 1, -1, 1, 1};
  const auto lambda = *largest_real_root(IntPoly{1, -1, -1, -1, 1}, 80);
  const ModulusBound m = max_root_modulus(p, 40);
  EXPECT_LE(m.lower, lambda.hi());
  EXPECT_GE(m.upper, lambda.lo());
  EXPECT_LT(m.upper - m.lower, Rational(1, 1000));
}

TEST(Graeffe, EnclosesKnownModulus) {
  // Roots 3 and -3 and 1/2: modulus 3.
  const IntPoly p = from_roots({Rational(3), Rational(-3), Rational(1, 2)});
  const ModulusBound m = max_root_modulus(p, 30);
  EXPECT_LE(m.lower, 3);
  EXPECT_GE(m.upper, 3);
  EXPECT_THROW(max_root_modulus(IntPoly{0, 1}), std::invalid_argument);
  EXPECT_THROW(max_root_modulus(IntPoly{5}), std::invalid_argument);
}

TEST(Graeffe, BoundsTightenMonotonically) {
  GraeffeSequence seq(IntPoly{1, 1, -1, 1, 1});
  Rational prev_width = -1;
  for (int k = 0; k < 10; ++k) {
    const ModulusBound m = seq.bound(200);
    EXPECT_LT(m.lower, m.upper);
    if (k > 2 && prev_width > 0) {
      EXPECT_LT(m.upper - m.lower, prev_width);
    }
    prev_width = m.upper - m.lower;
    seq.step();
  }
  EXPECT_EQ(seq.iterations(), 10);
}

TEST(Compare, SeparatedValues) {
  const auto a = *largest_real_root(IntPoly{-1, -1, 1});
  const auto b = *largest_real_root(IntPoly{-2, 0, 1});
  EXPECT_EQ(compare(a, b), std::strong_ordering::greater);
  EXPECT_EQ(compare(b, a), std::strong_ordering::less);
  EXPECT_EQ(to_string(compare(a, b)), "greater");
}

TEST(Compare, EqualityCertifiedThroughGcd) {
  // Same number, two different defining polynomials.
  const auto phi = *largest_real_root(IntPoly{-1, -1, 1});
  const auto phi_times = *largest_real_root(IntPoly{-1, -1, 1} * IntPoly{-5, 0, 1});
  ASSERT_LT(phi_times.approx(), 2.3);  // sqrt 5 > phi, so pick its root
  const auto sqrt5 = *largest_real_root(IntPoly{-5, 0, 1});
  EXPECT_EQ(compare(sqrt5, phi_times), std::strong_ordering::equal);
  const auto phi_again = *largest_real_root(IntPoly{-1, -1, 1} * IntPoly{1, 1, 1});
  EXPECT_EQ(compare(phi, phi_again), std::strong_ordering::equal);
}

TEST(Compare, ExactValues) {
  const auto x = AlgebraicValue::exact(IntPoly{-3, 2}, Rational(3, 2));
  const auto y = AlgebraicValue::exact(IntPoly{-5, 4}, Rational(5, 4));
  EXPECT_EQ(compare(x, y), std::strong_ordering::greater);
  EXPECT_EQ(compare(x, x), std::strong_ordering::equal);
  const auto r = *largest_real_root(IntPoly{-3, 2});
  EXPECT_EQ(compare(x, r), std::strong_ordering::equal);
}

TEST(Intervals, PowerLogReciprocal) {
  const RationalInterval x{Rational(3, 2), Rational(2)};
  const auto p = power(x, 3);
  EXPECT_EQ(p.lo, Rational(27, 8));
  EXPECT_EQ(p.hi, 8);
  const auto l = log_enclosure(RationalInterval{Rational(2), Rational(2)}, 64);
  EXPECT_LE(l.lo.get_d(), std::log(2.0) + 1e-15);
  EXPECT_GE(l.hi.get_d(), std::log(2.0) - 1e-15);
  EXPECT_LT(l.width(), Rational(1, 1'000'000'000));
  const auto r = reciprocal(x);
  EXPECT_EQ(r.lo, Rational(1, 2));
  EXPECT_EQ(r.hi, Rational(2, 3));
}

TEST(Decimals, TruncateAndRound) {
  EXPECT_EQ(floor_decimal(Rational(140126837, 100000000), 5), "1.40126");
  EXPECT_EQ(floor_decimal(Rational(-3, 2), 0), "-2");
  EXPECT_EQ(floor_decimal(Rational(1, 200), 2), "0.00");
  const auto v = *largest_real_root(IntPoly{1, -1, 0, 0, -1, 0, 0, -1, 1});  // Theta(3,4)
  EXPECT_EQ(truncate_decimal(v, 5), "1.40126");
  EXPECT_EQ(round_decimal(v, 5), "1.40127");
  EXPECT_EQ(round_decimal(v, 0), "1");
  EXPECT_EQ(truncate_decimal(v, 12), "1.401268367939");
}

}  // namespace
}  // namespace sbraid
