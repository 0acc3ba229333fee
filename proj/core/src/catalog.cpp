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

#include "sbraid/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "sbraid/parallel.hpp"

namespace sbraid {

std::string to_string(Constraint c) { return c == Constraint::orientable ? "orientable" : "unconstrained"; }

std::vector<CohomClass> candidates_for_genus(int g) {
  if (g < 2) throw std::invalid_argument("candidates_for_genus: genus must be >= 2");
  std::vector<CohomClass> out;
  for (int b : {g, g + 1}) {
    for (int a = 0; a < b; ++a) {
      CohomClass c{a, b};
      if (is_primitive_in_cone(c) && genus(c) == g) out.push_back(c);
    }
  }
  return out;
}

DilatationTable::DilatationTable(std::span<const CohomClass> classes, const CatalogOptions& options) {
  const int bits = options.precision_bits;
  auto values = parallel_map(classes, [bits](const CohomClass& c) { return dilatation(c, bits); }, options.jobs);
  for (std::size_t i = 0; i < classes.size(); ++i) values_.insert_or_assign(classes[i], std::move(values[i]));
}

const AlgebraicValue& DilatationTable::at(const CohomClass& c) const {
  auto it = values_.find(c);
  if (it == values_.end()) throw std::out_of_range("DilatationTable: no entry for " + to_string(c));
  return it->second;
}

namespace {

bool qualifies(const CohomClass& c, Constraint constraint) {
  if (!is_extendable(c)) return false;
  return constraint == Constraint::unconstrained || is_orientable(c);
}

bool tie_preferred(const CohomClass& x, const CohomClass& y) {
  if (std::abs(x.a) != std::abs(y.a)) return std::abs(x.a) < std::abs(y.a);
  return x.b < y.b;
}

std::vector<CohomClass> all_candidates(int g_lo, int g_hi) {
  std::vector<CohomClass> out;
  for (int b = 1; b <= g_hi + 1; ++b) {
    for (int a = 0; a < b; ++a) {
      CohomClass c{a, b};
      if (!is_primitive_in_cone(c)) continue;
      const int g = genus(c);
      if (g >= g_lo && g <= g_hi) out.push_back(c);
    }
  }
  return out;
}

}  // namespace

GenusMinimum min_for_genus(int g, Constraint constraint, const DilatationTable& table) {
  GenusMinimum out;
  out.genus = g;
  out.constraint = constraint;
  for (const CohomClass& c : candidates_for_genus(g)) {
    if (!qualifies(c, constraint)) continue;
    const AlgebraicValue& value = table.at(c);
    if (!out.cls) {
      out.cls = c;
      out.dilatation = value;
      continue;
    }
    const auto order = compare(value, *out.dilatation);
    if (order < 0 || (order == 0 && tie_preferred(c, *out.cls))) {
      out.cls = c;
      out.dilatation = value;
    }
  }
  if (out.cls) out.degrees = singularity_degrees(*out.cls);
  return out;
}

GenusMinimum min_for_genus(int g, Constraint constraint, const CatalogOptions& options) {
  auto candidates = candidates_for_genus(g);
  DilatationTable table(candidates, options);
  return min_for_genus(g, constraint, table);
}

std::vector<Table1Row> table1(int g_max, const CatalogOptions& options, int digits) {
  if (g_max < 2) throw std::invalid_argument("table1: g_max must be >= 2");
  auto classes = all_candidates(2, g_max);
  classes.insert(classes.begin(), CohomClass{0, 1});
  DilatationTable table(classes, options);

  auto entry = [&](const GenusMinimum& m) -> std::optional<Table1Entry> {
    if (!m.cls) return std::nullopt;
    return Table1Entry{*m.cls, *m.dilatation, truncate_decimal(*m.dilatation, digits),
                       round_decimal(*m.dilatation, digits), m.degrees};
  };

  std::vector<Table1Row> rows;
  {
    const CohomClass base{0, 1};
    const AlgebraicValue& v = table.at(base);
    Table1Entry e{base, v, truncate_decimal(v, digits), round_decimal(v, digits), {}};
    rows.push_back({1, e, e, "no closed genus-1 fiber in the cone; reports the (0,1) fibration (four-holed sphere)"});
  }
  for (int g = 2; g <= g_max; ++g) {
    Table1Row row;
    row.genus = g;
    row.orientable = entry(min_for_genus(g, Constraint::orientable, table));
    row.unconstrained = entry(min_for_genus(g, Constraint::unconstrained, table));
    if (!row.orientable) row.note = "no orientable class of this genus";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2Family> table2_families(int g) {
  const int r = ((g % 6) + 6) % 6;
  auto fam = [r](bool orientable, bool has, int offset, int modulus, std::vector<int> residues,
                 std::string text) {
    return Table2Family{r, orientable, has, offset, modulus, std::move(residues), std::move(text)};
  };
  switch (r) {
    case 0:
      return {fam(true, false, 0, 1, {}, "no example"),
              fam(false, true, 1, 3, {0}, "b = g+1, a = 0 (mod 3)")};
    case 1:
      return {fam(true, true, 1, 6, {3}, "b = g+1, a = 3 (mod 6)"),
              fam(false, true, 0, 3, {1, 2}, "b = g, a = 1,2 (mod 3)")};
    case 2:
      return {fam(true, true, 0, 6, {1, 5}, "b = g, a = 1,5 (mod 6)"),
              fam(false, true, 1, 3, {1, 2}, "b = g+1, a = 1,2 (mod 3)")};
    case 3:
      return {fam(true, true, 1, 6, {3}, "b = g+1, a = 3 (mod 6)"),
              fam(false, false, 0, 1, {}, "no example")};
    case 4:
      return {fam(true, true, 0, 6, {1, 5}, "b = g, a = 1,5 (mod 6)"),
              fam(false, true, 1, 3, {0}, "b = g+1, a = 0 (mod 3)")};
    default:
      return {fam(true, true, 1, 6, {1, 5}, "b = g+1, a = 1,5 (mod 6)"),
              fam(false, true, 0, 3, {1, 2}, "b = g, a = 1,2 (mod 3)")};
  }
}

std::optional<Table2Family> table2_membership(int g, const CohomClass& c) {
  if (g < 4) throw std::invalid_argument("table2_membership: the classification covers g >= 4");
  if (!is_primitive_in_cone(c) || genus(c) != g) return std::nullopt;
  for (auto& family : table2_families(g)) {
    if (!family.has_example || c.b != g + family.b_offset) continue;
    const int residue = ((c.a % family.a_modulus) + family.a_modulus) % family.a_modulus;
    if (std::find(family.a_residues.begin(), family.a_residues.end(), residue) == family.a_residues.end()) continue;
    if (family.orientable != is_orientable(c)) {
      throw std::logic_error("table2_membership: orientability disagrees for " + to_string(c));
    }
    return family;
  }
  throw std::logic_error("table2_membership: " + to_string(c) + " has genus " + std::to_string(g) +
                         " but matches no family");
}

std::vector<Table2Row> table2(int g_max) {
  std::vector<Table2Row> rows;
  for (int g = 4; g <= g_max; ++g) {
    auto families = table2_families(g);
    Table2Row row{g, families[0], families[1], {}, {}};
    for (const CohomClass& c : candidates_for_genus(g)) {
      auto family = table2_membership(g, c);
      (family->orientable ? row.orientable_classes : row.nonorientable_classes).push_back(c);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Table3Pattern table3_pattern(int g) {
  if (g < 4) throw std::invalid_argument("table3_pattern: g must be >= 4");
  switch (g % 6) {
    case 0: return {std::nullopt, {3, g + 1}};
    case 1:
    case 3: return {CohomClass{3, g + 1}, {3, g + 1}};
    case 2: return {CohomClass{1, g}, {1, g + 1}};
    case 4: return {CohomClass{1, g}, {3, g + 1}};
    default: return {CohomClass{1, g + 1}, {1, g + 1}};
  }
}

std::vector<Table3Row> table3(int g_max, const CatalogOptions& options) {
  if (g_max < 4) throw std::invalid_argument("table3: g_max must be >= 4");
  auto classes = all_candidates(4, g_max);
  DilatationTable table(classes, options);
  std::vector<Table3Row> rows;
  for (int g = 4; g <= g_max; ++g) {
    Table3Row row;
    row.genus = g;
    row.orientable = min_for_genus(g, Constraint::orientable, table).cls;
    row.unconstrained = min_for_genus(g, Constraint::unconstrained, table).cls;
    row.expected = table3_pattern(g);
    row.matches = row.orientable == row.expected.orientable && row.unconstrained == row.expected.unconstrained;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sbraid
