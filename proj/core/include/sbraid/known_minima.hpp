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

/// \file known_minima.hpp
/// Published minimality annotations for the genus-by-genus minima. These
/// are cited facts about global minima over all mapping classes, which the
/// cone computation here cannot establish. They are echoed next to the
/// computed values and never derived from them.

#include <optional>
#include <span>
#include <string_view>

namespace sbraid {

struct KnownMinimum {
  int genus;
  /// The cone's orientable minimum equals the global orientable minimum.
  bool orientable_is_global;
  /// The cone's unconstrained minimum equals the global minimum.
  bool unconstrained_is_global;
  std::string_view citation;
};

struct KnownMinimaTable {
  std::string_view version;
  std::span<const KnownMinimum> rows;
};

const KnownMinimaTable& known_minima();

std::optional<KnownMinimum> known_minimum(int genus);

}  // namespace sbraid
