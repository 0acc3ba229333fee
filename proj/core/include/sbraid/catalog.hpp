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

/// \file catalog.hpp
/// Per-genus enumeration of fibered-cone classes and the minimal
/// dilatations d_g (unconstrained) and d_g^+ (orientable) they realize.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbraid/algebraic.hpp"
#include "sbraid/fibration.hpp"

namespace sbraid {

enum class Constraint { orientable, unconstrained };

std::string to_string(Constraint c);

struct CatalogOptions {
  int precision_bits = kDefaultPrecisionBits;
  unsigned jobs = 1;
};

struct GenusMinimum {
  int genus = 0;
  Constraint constraint = Constraint::unconstrained;
  std::optional<CohomClass> cls;
  std::optional<AlgebraicValue> dilatation;
  std::vector<int> degrees;
};

/// Primitive cone classes with a >= 0 and the given genus, ordered by
/// (b, a). Genus g forces b = g (when 3 does not divide ab) or b = g + 1
/// (when it does). Throws std::invalid_argument for g < 2.
std::vector<CohomClass> candidates_for_genus(int g);

/// Certified dilatations for a batch of classes, evaluated on
/// `options.jobs` threads. Lookup order is independent of evaluation order.
class DilatationTable {
 public:
  DilatationTable(std::span<const CohomClass> classes, const CatalogOptions& options);

  const AlgebraicValue& at(const CohomClass& c) const;
  bool contains(const CohomClass& c) const { return values_.contains(c); }

 private:
  std::map<CohomClass, AlgebraicValue> values_;
};

/// Minimum over the extendable candidates of genus g satisfying the
/// constraint. Ties go to the smallest |a|, then the smallest b. The result
/// has no class when nothing qualifies.
GenusMinimum min_for_genus(int g, Constraint constraint, const CatalogOptions& options = {});
GenusMinimum min_for_genus(int g, Constraint constraint, const DilatationTable& table);

struct Table1Entry {
  CohomClass cls;
  AlgebraicValue dilatation;
  std::string truncated;  // floor at `digits` decimals
  std::string rounded;    // nearest at `digits` decimals
  std::vector<int> degrees;
};

struct Table1Row {
  int genus = 0;
  std::optional<Table1Entry> orientable;
  std::optional<Table1Entry> unconstrained;
  std::string note;
};

/// Rows for g = 1..g_max. The g = 1 row reports lambda_(0,1) in both
/// columns: no closed genus-1 fiber occurs in the cone (the fiber of (0,1)
/// is a four-holed sphere).
std::vector<Table1Row> table1(int g_max, const CatalogOptions& options = {}, int digits = 5);

/// One column of the genus classification for a residue of g mod 6.
struct Table2Family {
  int residue = 0;
  bool orientable = false;
  bool has_example = false;
  int b_offset = 0;  // b = g + b_offset
  int a_modulus = 1;
  std::vector<int> a_residues;
  std::string description;
};

/// The orientable and the non-orientable family for g mod 6, in that order.
std::vector<Table2Family> table2_families(int g);

/// Family containing c among the genus-g classes, or nothing when c has a
/// different genus (or is not primitive in the cone). Requires g >= 4.
/// Throws std::logic_error if c has genus g but fits no family or fits a
/// family of the wrong orientability.
std::optional<Table2Family> table2_membership(int g, const CohomClass& c);

struct Table2Row {
  int genus = 0;
  Table2Family orientable;
  Table2Family nonorientable;
  std::vector<CohomClass> orientable_classes;
  std::vector<CohomClass> nonorientable_classes;
};

/// Rows for g = 4..g_max with the candidates sorted into families.
std::vector<Table2Row> table2(int g_max);

struct Table3Pattern {
  std::optional<CohomClass> orientable;
  CohomClass unconstrained;
};

/// Closed-form minimizers by g mod 6 (g >= 4).
Table3Pattern table3_pattern(int g);

struct Table3Row {
  int genus = 0;
  std::optional<CohomClass> orientable;
  std::optional<CohomClass> unconstrained;
  Table3Pattern expected;
  bool matches = false;
};

/// Computed minimizers for g = 4..g_max, each checked against the pattern.
std::vector<Table3Row> table3(int g_max, const CatalogOptions& options = {});

}  // namespace sbraid
