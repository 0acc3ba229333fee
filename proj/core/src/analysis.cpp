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

#include "sbraid/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sbraid/catalog.hpp"
#include "sbraid/parallel.hpp"

namespace sbraid {

namespace {

Rational dyadic_neg(int bits) {
  Rational r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

std::string lambda_name(int a, int b) { return "lambda" + to_string(CohomClass{a, b}); }

// Runs `check` on every input; an InconclusiveError downgrades the verdict
// rather than aborting the report.
template <class T, class Fn>
void collect(VerificationReport& report, const std::vector<T>& inputs, Fn check, unsigned jobs) {
  struct Outcome {
    std::vector<Witness> witnesses;
    Verdict verdict = Verdict::pass;
  };
  auto outcomes = parallel_map(std::span<const T>(inputs), [&check](const T& in) {
    Outcome o;
    try {
      o.verdict = check(in, o.witnesses);
    } catch (const InconclusiveError& e) {
      o.verdict = Verdict::inconclusive;
      o.witnesses.push_back({"error", e.what()});
    }
    return o;
  }, jobs);
  for (auto& o : outcomes) {
    for (auto& w : o.witnesses) report.witnesses.push_back(std::move(w));
    if (o.verdict == Verdict::fail) report.verdict = Verdict::fail;
    if (o.verdict == Verdict::inconclusive && report.verdict == Verdict::pass) report.verdict = Verdict::inconclusive;
  }
}

RationalInterval abs_difference(const RationalInterval& x, const RationalInterval& y) {
  Rational lo = x.lo - y.hi;
  Rational hi = x.hi - y.lo;
  if (lo >= 0) return {lo, hi};
  if (hi <= 0) return {-hi, -lo};
  return {Rational(0), std::max<Rational>(-lo, hi)};
}

int bit_length(unsigned long v) {
  int n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive-at-precision";
  }
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.name << ": " << to_string(report.verdict) << "\n";
  os << "  range: " << report.range << "\n";
  if (!report.note.empty()) os << "  note: " << report.note << "\n";
  for (const auto& w : report.witnesses) os << "  " << w.input << " -> " << w.outcome << "\n";
  return os.str();
}

VerificationReport verify_compare_b(int b_max, const AnalysisOptions& options) {
  if (b_max < 3) throw std::invalid_argument("verify_compare_b: b_max must be >= 3");
  VerificationReport report{"compare-b", "3 <= b <= " + std::to_string(b_max), Verdict::pass, {}, {}};
  std::vector<int> bs;
  for (int b = 3; b <= b_max; ++b) {
    if (is_primitive_in_cone({3, b + 1})) bs.push_back(b);
  }
  const int bits = options.precision_bits;
  collect(report, bs, [bits](int b, std::vector<Witness>& out) {
    const auto order = compare(dilatation({1, b}, bits), dilatation({3, b + 1}, bits));
    out.push_back({lambda_name(1, b) + " vs " + lambda_name(3, b + 1), to_string(order)});
    const bool ok = b == 3 ? order == 0 : order > 0;
    return ok ? Verdict::pass : Verdict::fail;
  }, options.jobs);
  return report;
}

VerificationReport verify_chain(int b_max, const AnalysisOptions& options) {
  if (b_max < 4) throw std::invalid_argument("verify_chain: b_max must be >= 4");
  VerificationReport report{"chain", "4 <= b <= " + std::to_string(b_max), Verdict::pass, {}, {}};
  std::vector<int> bs;
  for (int b = 4; b <= b_max; ++b) {
    if (is_primitive_in_cone({3, b + 1})) bs.push_back(b);
  }
  const int bits = options.precision_bits;
  collect(report, bs, [bits](int b, std::vector<Witness>& out) {
    const auto first = dilatation({1, b}, bits);
    const auto middle = dilatation({3, b + 1}, bits);
    const auto last = dilatation({1, b + 1}, bits);
    const auto left = compare(first, middle);
    const auto right = compare(middle, last);
    out.push_back({lambda_name(1, b) + " vs " + lambda_name(3, b + 1), to_string(left)});
    out.push_back({lambda_name(3, b + 1) + " vs " + lambda_name(1, b + 1), to_string(right)});
    return left > 0 && right > 0 ? Verdict::pass : Verdict::fail;
  }, options.jobs);
  return report;
}

AlgebraicValue golden_square(int precision_bits) {
  return *largest_real_root(IntPoly{1, -3, 1}, precision_bits);
}

std::vector<LimitPoint> limit_sequence(int a, int n_max, int precision_bits, int width_bits, unsigned jobs) {
  if (a < 0) throw std::invalid_argument("limit_sequence: a must be >= 0");
  if (n_max < a + 2) throw std::invalid_argument("limit_sequence: n_max must be >= a + 2");
  std::vector<int> ns;
  for (int n = a + 1; n <= n_max; ++n) {
    if (is_primitive_in_cone({a, n})) ns.push_back(n);
  }
  const Rational max_width = dyadic_neg(width_bits);
  // lambda^n <= 3 on the cone, so d(lambda^n) <= 3 n d(lambda).
  const int golden_bits = std::max(precision_bits, width_bits + 8);
  const RationalInterval golden = golden_square(golden_bits).interval();
  return parallel_map(std::span<const int>(ns), [&](int n) {
    int bits = std::max(precision_bits, width_bits + bit_length(static_cast<unsigned long>(n)) + 4);
    AlgebraicValue lambda = dilatation({a, n}, bits);
    RationalInterval p = power(lambda, static_cast<unsigned long>(n));
    while (p.width() > max_width) {
      bits *= 2;
      lambda = lambda.refined(bits);
      p = power(lambda, static_cast<unsigned long>(n));
    }
    return LimitPoint{n, p, abs_difference(p, golden)};
  }, jobs);
}

VerificationReport verify_limit(int a, int n_max, double tolerance, const AnalysisOptions& options) {
  VerificationReport report{"limit", "a = " + std::to_string(a) + ", n <= " + std::to_string(n_max),
                            Verdict::pass, {}, {}};
  // Consecutive gaps differ by roughly gap/n; 2^-40 wide enclosures
  // separate them comfortably for n <= 1000.
  auto seq = limit_sequence(a, n_max, options.precision_bits, 40, options.jobs);
  auto at = [&](int n) -> const LimitPoint* {
    for (const auto& p : seq) {
      if (p.n == n) return &p;
    }
    return nullptr;
  };
  const LimitPoint* early = at(20);
  const LimitPoint* last = seq.empty() ? nullptr : &seq.back();
  if (!early || !last || last->n <= 20) {
    report.verdict = Verdict::fail;
    report.note = "need primitive (a,20) and n_max > 20";
    return report;
  }
  bool monotone = true;
  const LimitPoint* prev = nullptr;
  for (const auto& p : seq) {
    if (p.n < 10) continue;
    if (prev && !(p.gap.hi < prev->gap.lo)) {
      monotone = false;
      report.witnesses.push_back({"gap(" + std::to_string(prev->n) + ") vs gap(" + std::to_string(p.n) + ")",
                                  "not certified decreasing"});
    }
    prev = &p;
  }
  report.witnesses.push_back({"gaps decreasing on [10," + std::to_string(last->n) + "]", monotone ? "yes" : "no"});
  const bool shrinks = last->gap.hi < early->gap.lo;
  report.witnesses.push_back({"gap(" + std::to_string(last->n) + ") vs gap(20)", shrinks ? "less" : "not less"});
  const bool within = last->gap.hi < Rational(tolerance);
  std::ostringstream tol;
  tol << tolerance;
  report.witnesses.push_back({"gap(" + std::to_string(last->n) + ") vs tolerance " + tol.str(),
                              within ? "less" : "not less"});
  std::ostringstream gap;
  gap.precision(6);
  gap << last->gap.hi.get_d();
  report.note = "gap(" + std::to_string(last->n) + ") <= " + gap.str();
  if (!(monotone && shrinks && within)) report.verdict = Verdict::fail;
  return report;
}

RationalInterval normalized_dilatation(const CohomClass& c, int precision_bits) {
  if (!is_primitive_in_cone(c)) throw NotPrimitiveError(c);
  return power(dilatation(c, precision_bits), static_cast<unsigned long>(thurston_norm(c)));
}

VerificationReport fried_concavity_probe(int b, int precision_bits) {
  if (b < 8) throw std::invalid_argument("fried_concavity_probe: b must be >= 8");
  VerificationReport report{"concavity", "slice b = " + std::to_string(b), Verdict::pass, {}, {}};
  report.note = "finite probe of concavity along one slice; epsilon = 2^-" + std::to_string(precision_bits / 2);
  const int working = 2 * precision_bits;
  const Rational epsilon = dyadic_neg(precision_bits / 2);

  // y(a) for primitive a in (-b, b); y(-a) = y(a).
  std::map<int, RationalInterval> y;
  for (int a = 0; a < b; ++a) {
    if (!is_primitive_in_cone({a, b})) continue;
    auto lambda = dilatation({a, b}, working).interval();
    auto log_l = log_enclosure(lambda, working);
    RationalInterval scaled{log_l.lo * b, log_l.hi * b};
    auto v = reciprocal(scaled);
    y.emplace(a, v);
    y.emplace(-a, v);
  }

  int checked = 0;
  int violations = 0;
  for (const auto& [a, ya] : y) {
    if (a < 0) continue;
    for (int d = 1; a + d < b; ++d) {
      auto lo_it = y.find(a - d);
      auto hi_it = y.find(a + d);
      if (lo_it == y.end() || hi_it == y.end()) continue;
      ++checked;
      const Rational rhs = (lo_it->second.hi + hi_it->second.hi) / 2 - epsilon;
      if (!(ya.lo >= rhs)) {
        ++violations;
        report.witnesses.push_back({"y(" + std::to_string(a) + ") vs midpoint of y(" + std::to_string(a - d) +
                                        "), y(" + std::to_string(a + d) + ")",
                                    "violated"});
      }
    }
  }
  report.witnesses.push_back({"midpoint inequalities checked", std::to_string(checked)});
  report.witnesses.push_back({"midpoint violations", std::to_string(violations)});

  bool decreasing = true;
  const RationalInterval* prev = nullptr;
  for (const auto& [a, ya] : y) {
    if (a < 0) continue;
    if (prev && !(ya.hi < prev->lo)) decreasing = false;
    prev = &ya;
  }
  report.witnesses.push_back({"y strictly decreasing in |a|", decreasing ? "yes" : "no"});
  if (violations > 0 || !decreasing) report.verdict = Verdict::fail;
  return report;
}

IntPoly lehmer_polynomial() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntPoly cho_ham_polynomial() { return IntPoly{1, -1, -1, -1, 1}; }

VerificationReport verify_lehmer() {
  VerificationReport report{"lehmer", "class (1,6)", Verdict::pass, {}, {}};
  const IntPoly theta = teichmuller_specialization({1, 6});
  const IntPoly lehmer = lehmer_polynomial();
  const Division div = divide(theta, lehmer);
  const bool exact = !div.pseudo && div.remainder.is_zero() && div.quotient * lehmer == theta;
  report.witnesses.push_back({"Theta(1,6) = " + theta.to_string(), "specialized"});
  report.witnesses.push_back({"Theta(1,6) mod Lehmer",
                              exact ? "remainder 0, quotient " + div.quotient.to_string() : "nonzero remainder"});

  const AlgebraicValue lambda = dilatation({1, 6});
  const AlgebraicValue root = *largest_real_root(lehmer);
  const auto order = compare(lambda, root);
  report.witnesses.push_back({"lambda(1,6) vs largest root of Lehmer", to_string(order)});
  const std::string digits = truncate_decimal(lambda, 5);
  report.witnesses.push_back({"lambda(1,6) truncated", digits});
  if (!exact || order != 0 || digits != "1.17628") report.verdict = Verdict::fail;
  return report;
}

VerificationReport verify_choham() {
  VerificationReport report{"choham", "class (1,2)", Verdict::pass, {}, {}};
  const IntPoly theta = teichmuller_specialization({1, 2});
  const bool identity = theta == cho_ham_polynomial();
  report.witnesses.push_back({"Theta(1,2) = " + theta.to_string(), identity ? "matches t^4 - t^3 - t^2 - t + 1" : "differs"});
  const bool reciprocal = is_reciprocal(theta);
  report.witnesses.push_back({"reciprocal", reciprocal ? "yes" : "no"});
  const std::string digits = truncate_decimal(dilatation({1, 2}), 5);
  report.witnesses.push_back({"lambda(1,2) truncated", digits});
  if (!identity || !reciprocal || digits != "1.72208") report.verdict = Verdict::fail;
  return report;
}

VerificationReport verify_strict_inequality_corollary(const AnalysisOptions& options) {
  VerificationReport report{"strict-inequality", "g in {4, 6, 8}", Verdict::pass, {}, {}};
  report.note = "cone-level minima only; g = 6 rests on cited global values";
  const CatalogOptions catalog{options.precision_bits, options.jobs};
  for (int g : {4, 6, 8}) {
    const auto un = min_for_genus(g, Constraint::unconstrained, catalog);
    const auto ori = min_for_genus(g, Constraint::orientable, catalog);
    const std::string input = "g=" + std::to_string(g) + ": d_g vs d_g^+";
    if (!un.cls) {
      report.verdict = Verdict::fail;
      report.witnesses.push_back({input, "no unconstrained minimum"});
      continue;
    }
    if (!ori.cls) {
      report.witnesses.push_back({input, "orientable cone minimum absent; d_g = " +
                                             truncate_decimal(*un.dilatation, 5) + ", comparison deferred"});
      continue;
    }
    const auto order = compare(*un.dilatation, *ori.dilatation);
    report.witnesses.push_back({input, to_string(order) + " (" + truncate_decimal(*un.dilatation, 5) + " vs " +
                                           truncate_decimal(*ori.dilatation, 5) + ")"});
    if (order >= 0) report.verdict = Verdict::fail;
  }
  return report;
}

VerificationReport verify_poincare_hopf(int b_max) {
  if (b_max < 1) throw std::invalid_argument("verify_poincare_hopf: b_max must be >= 1");
  VerificationReport report{"poincare-hopf", "primitive classes with b <= " + std::to_string(b_max),
                            Verdict::pass, {}, {}};
  const std::vector<CohomClass> exceptional{{0, 1}, {1, 3}, {-1, 3}, {2, 3}, {-2, 3}};
  long checked = 0;
  for (int b = 1; b <= b_max; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      const CohomClass c{a, b};
      if (!is_primitive_in_cone(c)) continue;
      ++checked;
      const int g = genus(c);
      int euler = 0;
      for (int n : prong_type(c)) euler += n - 2;
      auto [k1, k2] = boundary_components(c);
      const bool listed = std::find(exceptional.begin(), exceptional.end(), c) != exceptional.end();
      if (euler != 4 * g - 4) report.witnesses.push_back({to_string(c), "sum(n_i - 2) != 4g - 4"});
      if (2 * b != 2 * g - 2 + k1 + k2) report.witnesses.push_back({to_string(c), "2b != 2g - 2 + boundary"});
      if (thurston_norm(c) != 2 * b) report.witnesses.push_back({to_string(c), "norm != 2b"});
      if (is_extendable(c) == listed) report.witnesses.push_back({to_string(c), "extendability disagrees with the exceptional list"});
    }
  }
  if (!report.witnesses.empty()) report.verdict = Verdict::fail;
  report.witnesses.push_back({"classes checked", std::to_string(checked)});
  return report;
}

std::optional<ModulusBound> certify_homological_below(const CohomClass& c, int precision_bits,
                                                      const GraeffeOptions& options) {
  const AlgebraicValue lambda = dilatation(c, precision_bits);
  GraeffeSequence seq(alexander_specialization(c));
  const int working = 2 * precision_bits + 64;
  for (;;) {
    ModulusBound bound = seq.bound(working);
    if (bound.upper < lambda.lo()) return bound;
    if (bound.lower > lambda.hi()) return std::nullopt;
    if (seq.iterations() >= options.max_iterations || seq.total_bits() > options.max_total_bits) return std::nullopt;
    seq.step();
  }
}

VerificationReport verify_orientability(int identity_b_max, int strict_b_max, const AnalysisOptions& options) {
  VerificationReport report{"orientability",
                            "identity for b <= " + std::to_string(identity_b_max) + ", strict gap for odd b <= " +
                                std::to_string(strict_b_max),
                            Verdict::pass, {}, {}};
  long identities = 0;
  for (int b = 1; b <= identity_b_max; ++b) {
    for (int a = -b + 1; a < b; ++a) {
      const CohomClass c{a, b};
      if (!is_primitive_in_cone(c)) continue;
      ++identities;
      const bool identity = alexander_specialization(c) == negate_variable(teichmuller_specialization(c));
      if (identity != is_orientable(c)) {
        report.verdict = Verdict::fail;
        report.witnesses.push_back({to_string(c), "parity predicate disagrees with Delta(t) = Theta(-t)"});
      }
    }
  }
  report.witnesses.push_back({"parity vs polynomial identity, classes checked", std::to_string(identities)});

  std::vector<CohomClass> odd;
  for (int b = 1; b <= strict_b_max; b += 2) {
    for (int a = 0; a < b; ++a) {
      if (is_primitive_in_cone({a, b})) odd.push_back({a, b});
    }
  }
  const int bits = options.precision_bits;
  VerificationReport strict{"", "", Verdict::pass, {}, {}};
  collect(strict, odd, [bits](const CohomClass& c, std::vector<Witness>& out) {
    if (certify_homological_below(c, bits)) return Verdict::pass;
    out.push_back({"lambda_hom" + to_string(c) + " vs lambda" + to_string(c), "not certified below"});
    return Verdict::fail;
  }, options.jobs);
  for (auto& w : strict.witnesses) report.witnesses.push_back(std::move(w));
  report.witnesses.push_back({"odd-b classes with lambda_hom < lambda certified", std::to_string(odd.size())});
  if (strict.verdict != Verdict::pass && report.verdict == Verdict::pass) report.verdict = strict.verdict;
  return report;
}

}  // namespace sbraid
