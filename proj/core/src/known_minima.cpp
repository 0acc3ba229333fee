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

#include "sbraid/known_minima.hpp"

#include <array>

namespace sbraid {

namespace {

// Version 1. Genera not listed carry no annotation.
constexpr std::array<KnownMinimum, 6> kRows{{
    {1, true, true, "Anosov maps of the torus: (3+sqrt5)/2 is minimal"},
    {2, true, true, "Cho-Ham 2008; Lanneau-Thiffeault 2009"},
    {3, true, false, "Lanneau-Thiffeault 2009"},
    {4, true, false, "Lanneau-Thiffeault 2009"},
    {5, true, false, "Lanneau-Thiffeault 2009 (Lehmer's number)"},
    {8, true, false, "Lanneau-Thiffeault 2009, conditional on their orientable lower bound"},
}};

constexpr KnownMinimaTable kTable{"1", kRows};

}  // namespace

const KnownMinimaTable& known_minima() { return kTable; }

std::optional<KnownMinimum> known_minimum(int genus) {
  for (const auto& row : kRows) {
    if (row.genus == genus) return row;
  }
  return std::nullopt;
}

}  // namespace sbraid
