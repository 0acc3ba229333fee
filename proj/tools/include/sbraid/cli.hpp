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

/// \file cli.hpp
/// The `sbraid` command line: single-class queries, table reproduction,
/// verification suites and cone scans. Kept as a library so tests can
/// drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbraid/fibration.hpp"

namespace sbraid::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kBadInput = 2 };

/// One row of `fiber` and `scan` output. Decimal fields are certified
/// nearest roundings at the requested number of digits.
struct OutputRecord {
  int a = 0;
  int b = 0;
  int norm = 0;
  int genus = 0;
  int boundary_total = 0;
  std::vector<int> prongs;   // descending
  std::vector<int> degrees;  // descending, degree-0 points dropped
  bool orientable = false;
  bool extendable = false;
  std::string dilatation;
  std::string normalized_dilatation;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const CohomClass& c, int digits, int precision_bits);

Json to_json(const OutputRecord& r);
OutputRecord record_from_json(const Json& j);

/// `a,b,norm,genus,boundary,prongs,degrees,orientable,extendable,dilatation,normalized`
const std::string& csv_header();

/// Multisets are ';'-separated inside their cell, e.g. `9;1;1;1`.
std::string to_csv_row(const OutputRecord& r);

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbraid::cli
