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

#include "sbraid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sbraid/analysis.hpp"
#include "sbraid/catalog.hpp"
#include "sbraid/known_minima.hpp"
#include "sbraid/parallel.hpp"

namespace sbraid::cli {

namespace {

std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string tuple(const std::vector<int>& xs) { return "(" + join(xs, ',') + ")"; }

std::string classes(const std::vector<CohomClass>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : " ") + to_string(c);
  return s;
}

Json class_json(const std::optional<CohomClass>& c) {
  if (!c) return nullptr;
  return Json{{"a", c->a}, {"b", c->b}};
}

Json classes_json(const std::vector<CohomClass>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(class_json(c));
  return out;
}

std::string degrees_text(const std::vector<int>& d) { return d.empty() ? "no sing." : tuple(d); }

struct Globals {
  int precision = kDefaultPrecisionBits;
  unsigned jobs = default_jobs();
};

// --- fiber -----------------------------------------------------------------

int cmd_fiber(const CohomClass& c, int digits, const std::string& format, const Globals& g, std::ostream& out) {
  const OutputRecord r = make_record(c, digits, g.precision);
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
    return kSuccess;
  }
  const auto [k1, k2] = boundary_components(c);
  auto line = [&out](const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(14) << key << value << "\n";
  };
  out << "class " << to_string(c) << "\n";
  line("norm", std::to_string(r.norm));
  line("genus", std::to_string(r.genus));
  line("boundary", std::to_string(r.boundary_total) + " (" + std::to_string(k1) + " from K1, " +
                       std::to_string(k2) + " from K2)");
  line("prongs", tuple(r.prongs));
  line("degrees", degrees_text(r.degrees));
  line("orientable", r.orientable ? "true" : "false");
  line("extendable", r.extendable ? "true" : "false");
  line("dilatation", r.dilatation);
  line("normalized", r.normalized_dilatation);
  line("theta", teichmuller_specialization(c).to_string());
  line("delta", alexander_specialization(c).to_string());
  return kSuccess;
}

// --- table -----------------------------------------------------------------

Json entry_json(const std::optional<Table1Entry>& e, bool known) {
  if (!e) return nullptr;
  return Json{{"a", e->cls.a},
              {"b", e->cls.b},
              {"dilatation", e->rounded},
              {"truncated", e->truncated},
              {"degrees", e->degrees},
              {"known_minimal", known}};
}

int table1_out(int g_max, int digits, const std::string& format, const Globals& g, std::ostream& out) {
  const auto rows = table1(g_max, CatalogOptions{g.precision, g.jobs}, digits);
  auto known = [](int genus, bool orientable) {
    auto k = known_minimum(genus);
    return k && (orientable ? k->orientable_is_global : k->unconstrained_is_global);
  };
  if (format == "json") {
    Json j{{"table", 1}, {"digits", digits}, {"known_minima_version", std::string(known_minima().version)}};
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"genus", r.genus},
                      {"orientable", entry_json(r.orientable, known(r.genus, true))},
                      {"unconstrained", entry_json(r.unconstrained, known(r.genus, false))},
                      {"note", r.note}});
    }
    j["rows"] = std::move(list);
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  if (format == "csv") {
    out << "genus,orientable_class,orientable_dilatation,orientable_degrees,orientable_known_minimal,"
           "unconstrained_class,unconstrained_dilatation,unconstrained_degrees,unconstrained_known_minimal\n";
    auto cells = [](const std::optional<Table1Entry>& e, bool k) -> std::string {
      if (!e) return ",,,";
      return "\"" + to_string(e->cls) + "\"," + e->rounded + "," + join(e->degrees, ';') + "," + (k ? "true" : "false");
    };
    for (const auto& r : rows) {
      out << r.genus << "," << cells(r.orientable, known(r.genus, true)) << ","
          << cells(r.unconstrained, known(r.genus, false)) << "\n";
    }
    return kSuccess;
  }
  const int w = std::max(digits + 5, 14);
  out << std::left << std::setw(4) << "g" << std::setw(9) << "class" << std::setw(w) << "orientable"
      << std::setw(16) << "degrees" << std::setw(9) << "class" << std::setw(w) << "unconstrained" << "degrees\n";
  auto cells = [&](const std::optional<Table1Entry>& e, bool k, bool last) {
    if (!e) {
      out << std::setw(9) << "-" << std::setw(w) << "-";
      out << (last ? "-" : "-               ");
      return;
    }
    out << std::setw(9) << to_string(e->cls) << std::setw(w) << e->rounded + (k ? "*" : "");
    if (last) {
      out << degrees_text(e->degrees);
    } else {
      out << std::setw(16) << degrees_text(e->degrees);
    }
  };
  for (const auto& r : rows) {
    out << std::setw(4) << r.genus;
    cells(r.orientable, known(r.genus, true), false);
    cells(r.unconstrained, known(r.genus, false), true);
    out << "\n";
  }
  out << "\n* the cone minimum equals the published global minimum:\n";
  for (const auto& k : known_minima().rows) {
    if (k.genus <= g_max) out << "  g=" << k.genus << ": " << k.citation << "\n";
  }
  out << "g=1 reports the (0,1) fibration; no closed genus-1 fiber lies in the cone.\n";
  out << "values are certified nearest roundings to " << digits << " decimals.\n";
  return kSuccess;
}

Json family_json(const Table2Family& f) {
  return Json{{"orientable", f.orientable},
              {"has_example", f.has_example},
              {"b_offset", f.b_offset},
              {"a_modulus", f.a_modulus},
              {"a_residues", f.a_residues},
              {"description", f.description}};
}

int table2_out(int g_max, const std::string& format, std::ostream& out) {
  const auto rows = table2(g_max);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"genus", r.genus},
                      {"residue", r.orientable.residue},
                      {"orientable", family_json(r.orientable)},
                      {"nonorientable", family_json(r.nonorientable)},
                      {"orientable_classes", classes_json(r.orientable_classes)},
                      {"nonorientable_classes", classes_json(r.nonorientable_classes)}});
    }
    out << Json{{"table", 2}, {"rows", std::move(list)}}.dump(2) << "\n";
    return kSuccess;
  }
  if (format == "csv") {
    out << "genus,residue,orientable_family,nonorientable_family,orientable_classes,nonorientable_classes\n";
    for (const auto& r : rows) {
      out << r.genus << "," << r.orientable.residue << ",\"" << r.orientable.description << "\",\""
          << r.nonorientable.description << "\",\"" << classes(r.orientable_classes) << "\",\""
          << classes(r.nonorientable_classes) << "\"\n";
    }
    return kSuccess;
  }
  out << std::left << std::setw(5) << "g" << std::setw(9) << "g mod 6" << std::setw(30) << "orientable"
      << "non-orientable\n";
  for (const auto& r : rows) {
    out << std::setw(5) << r.genus << std::setw(9) << r.orientable.residue << std::setw(30)
        << r.orientable.description << r.nonorientable.description << "\n";
    out << std::setw(14) << "" << std::setw(30) << classes(r.orientable_classes)
        << classes(r.nonorientable_classes) << "\n";
  }
  return kSuccess;
}

int table3_out(int g_max, const std::string& format, const Globals& g, std::ostream& out) {
  const auto rows = table3(g_max, CatalogOptions{g.precision, g.jobs});
  const bool all = std::all_of(rows.begin(), rows.end(), [](const Table3Row& r) { return r.matches; });
  auto name = [](const std::optional<CohomClass>& c) { return c ? to_string(*c) : std::string("-"); };
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"genus", r.genus},
                      {"orientable", class_json(r.orientable)},
                      {"unconstrained", class_json(r.unconstrained)},
                      {"expected_orientable", class_json(r.expected.orientable)},
                      {"expected_unconstrained", class_json(r.expected.unconstrained)},
                      {"matches", r.matches}});
    }
    out << Json{{"table", 3}, {"all_match", all}, {"rows", std::move(list)}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "genus,residue,orientable,unconstrained,expected_orientable,expected_unconstrained,matches\n";
    for (const auto& r : rows) {
      out << r.genus << "," << r.genus % 6 << ",\"" << name(r.orientable) << "\",\"" << name(r.unconstrained)
          << "\",\"" << name(r.expected.orientable) << "\",\"" << name(r.expected.unconstrained) << "\","
          << (r.matches ? "true" : "false") << "\n";
    }
  } else {
    out << std::left << std::setw(5) << "g" << std::setw(9) << "g mod 6" << std::setw(12) << "orientable"
        << std::setw(15) << "unconstrained" << "pattern\n";
    for (const auto& r : rows) {
      out << std::setw(5) << r.genus << std::setw(9) << r.genus % 6 << std::setw(12) << name(r.orientable)
          << std::setw(15) << name(r.unconstrained) << (r.matches ? "match" : "MISMATCH") << "\n";
    }
  }
  return all ? kSuccess : kVerificationFailure;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::optional<int> b_max;
  int strict_b_max = 30;
  int n_max = 200;
  int a = 1;
  int slice = 30;
  double tolerance = kLimitGapTolerance;
  std::string format = "text";
};

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"compare-b",     "chain",         "limit",
                                              "lehmer",        "choham",        "poincare-hopf",
                                              "concavity",     "orientability", "strict-inequality"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyArgs& v, const Globals& g) {
  const AnalysisOptions opts{g.precision, g.jobs};
  if (suite == "compare-b") return verify_compare_b(v.b_max.value_or(30), opts);
  if (suite == "chain") return verify_chain(v.b_max.value_or(30), opts);
  if (suite == "limit") return verify_limit(v.a, v.n_max, v.tolerance, opts);
  if (suite == "lehmer") return verify_lehmer();
  if (suite == "choham") return verify_choham();
  if (suite == "poincare-hopf") return verify_poincare_hopf(v.b_max.value_or(200));
  if (suite == "concavity") return fried_concavity_probe(v.slice, g.precision);
  if (suite == "orientability") return verify_orientability(v.b_max.value_or(100), v.strict_b_max, opts);
  return verify_strict_inequality_corollary(opts);
}

Json report_json(const VerificationReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back({{"input", x.input}, {"outcome", x.outcome}});
  return Json{{"name", r.name}, {"range", r.range}, {"verdict", to_string(r.verdict)}, {"note", r.note},
              {"witnesses", std::move(w)}};
}

int cmd_verify(const VerifyArgs& v, const Globals& g, std::ostream& out) {
  std::vector<std::string> suites = v.suite == "all" ? suite_names() : std::vector<std::string>{v.suite};
  std::vector<VerificationReport> reports;
  for (const auto& s : suites) reports.push_back(run_suite(s, v, g));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (v.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    out << Json{{"suite", v.suite}, {"passed", ok}, {"reports", std::move(list)}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
    if (reports.size() > 1) {
      const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
      out << "summary: " << passed << "/" << reports.size() << " suites passed\n";
    }
  }
  return ok ? kSuccess : kVerificationFailure;
}

// --- scan ------------------------------------------------------------------

std::vector<CohomClass> scan_classes(int b_max) {
  std::vector<CohomClass> out;
  for (int b = 1; b <= b_max; ++b) {
    for (int a = 0; a < b; ++a) {
      if (is_primitive_in_cone({a, b})) out.push_back({a, b});
    }
  }
  return out;
}

void write_scan(const std::vector<OutputRecord>& records, int b_max, int digits, const std::string& format,
                std::ostream& out) {
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : records) list.push_back(to_json(r));
    out << Json{{"bmax", b_max}, {"digits", digits}, {"records", std::move(list)}}.dump(2) << "\n";
    return;
  }
  out << csv_header() << "\n";
  for (const auto& r : records) out << to_csv_row(r) << "\n";
}

int cmd_scan(int b_max, int digits, const std::string& format, const std::string& path, const Globals& g,
             std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << path << "\n";
      return kBadInput;
    }
  }
  const auto cs = scan_classes(b_max);
  const int bits = g.precision;
  auto records = parallel_map(std::span<const CohomClass>(cs),
                              [digits, bits](const CohomClass& c) { return make_record(c, digits, bits); }, g.jobs);
  std::ostream& sink = path.empty() ? out : file;
  write_scan(records, b_max, digits, format, sink);
  if (!path.empty()) {
    file.close();
    if (!file) {
      err << "error: cannot write " << path << "\n";
      return kBadInput;
    }
  }
  return kSuccess;
}

}  // namespace

OutputRecord make_record(const CohomClass& c, int digits, int precision_bits) {
  const FiberData f = fiber_summary(c, precision_bits);
  OutputRecord r;
  r.a = c.a;
  r.b = c.b;
  r.norm = f.thurston_norm;
  r.genus = f.genus;
  r.boundary_total = f.boundary_total();
  r.prongs = f.prongs;
  r.degrees = f.degrees;
  r.orientable = f.orientable;
  r.extendable = f.extendable;
  r.dilatation = round_decimal(f.dilatation, digits);
  const auto exponent = static_cast<unsigned long>(f.thurston_norm);
  r.normalized_dilatation = round_decimal(
      [&f, exponent](int bits) { return power(f.dilatation.refined(bits), exponent); }, digits,
      std::max(precision_bits, kDefaultPrecisionBits));
  return r;
}

Json to_json(const OutputRecord& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"norm", r.norm},
              {"genus", r.genus},
              {"boundary_total", r.boundary_total},
              {"prongs", r.prongs},
              {"degrees", r.degrees},
              {"orientable", r.orientable},
              {"extendable", r.extendable},
              {"dilatation", r.dilatation},
              {"normalized_dilatation", r.normalized_dilatation}};
}

OutputRecord record_from_json(const Json& j) {
  OutputRecord r;
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("norm").get_to(r.norm);
  j.at("genus").get_to(r.genus);
  j.at("boundary_total").get_to(r.boundary_total);
  j.at("prongs").get_to(r.prongs);
  j.at("degrees").get_to(r.degrees);
  j.at("orientable").get_to(r.orientable);
  j.at("extendable").get_to(r.extendable);
  j.at("dilatation").get_to(r.dilatation);
  j.at("normalized_dilatation").get_to(r.normalized_dilatation);
  return r;
}

const std::string& csv_header() {
  static const std::string header = "a,b,norm,genus,boundary,prongs,degrees,orientable,extendable,dilatation,normalized";
  return header;
}

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << r.a << ',' << r.b << ',' << r.norm << ',' << r.genus << ',' << r.boundary_total << ',' << join(r.prongs, ';')
     << ',' << join(r.degrees, ';') << ',' << (r.orientable ? "true" : "false") << ','
     << (r.extendable ? "true" : "false") << ',' << r.dilatation << ',' << r.normalized_dilatation;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified dilatations and fiber invariants for the fibered cone of the "
               "sigma_1 sigma_2^-1 mapping torus.",
               "sbraid"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  auto* precision = app.add_option("--precision", g.precision, "Working precision in bits (env SBRAID_PRECISION)")
      ->check(CLI::Range(16, 1 << 16))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  CohomClass fiber_cls;
  int digits = 5;
  std::string format = "text";

  auto* fiber = app.add_subcommand("fiber", "Invariants of one primitive class (a, b)");
  fiber->add_option("a", fiber_cls.a)->required();
  fiber->add_option("b", fiber_cls.b)->required();
  fiber->add_option("--digits", digits, "Decimals shown")->check(CLI::Range(0, 100))->capture_default_str();
  fiber->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  int which = 1;
  std::optional<int> g_max;
  auto* table = app.add_subcommand("table", "Reproduce table 1, 2 or 3");
  table->add_option("which", which)->required()->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--gmax", g_max, "Largest genus (default 12 for table 1, 60 otherwise)");
  table->add_option("--digits", digits, "Decimals shown (table 1)")->check(CLI::Range(0, 100));
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  VerifyArgs v;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", v.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--bmax", v.b_max, "Upper end of the b range");
  verify->add_option("--strict-bmax", v.strict_b_max, "Odd b range of the strict homological check")
      ->check(CLI::Range(1, 1000));
  verify->add_option("--nmax", v.n_max, "Upper end of the limit sequence")->check(CLI::Range(3, 100000));
  verify->add_option("-a", v.a, "Slope numerator of the limit sequence")->check(CLI::Range(0, 100000));
  verify->add_option("--slice", v.slice, "b of the concavity slice")->check(CLI::Range(8, 100000));
  verify->add_option("--tolerance", v.tolerance, "Limit gap tolerance");
  verify->add_option("--format", v.format)->check(CLI::IsMember({"text", "json"}));

  int scan_b_max = 0;
  std::string out_path;
  std::string scan_format = "csv";
  auto* scan = app.add_subcommand("scan", "All primitive cone classes with b <= bmax and a >= 0");
  scan->add_option("--bmax", scan_b_max)->required()->check(CLI::Range(1, 100000));
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", out_path, "Output file (default stdout)");
  scan->add_option("--digits", digits, "Decimals shown")->check(CLI::Range(0, 100));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    // CLI11 drops malformed environment values silently, so read it here.
    const char* env = std::getenv("SBRAID_PRECISION");
    if (env != nullptr && precision->count() == 0) {
      const std::string text(env);
      int bits = 0;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
      if (ec != std::errc() || end != text.data() + text.size() || bits < 16 || bits > (1 << 16)) {
        throw CLI::ValidationError("SBRAID_PRECISION", "expected an integer in [16, 65536], got '" + text + "'");
      }
      g.precision = bits;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadInput;
  }

  try {
    if (*fiber) {
      if (!is_primitive_in_cone(fiber_cls)) throw NotPrimitiveError(fiber_cls);
      return cmd_fiber(fiber_cls, digits, format, g, out);
    }
    if (*table) {
      if (which == 1) return table1_out(g_max.value_or(12), digits, format, g, out);
      if (which == 2) return table2_out(g_max.value_or(60), format, out);
      return table3_out(g_max.value_or(60), format, g, out);
    }
    if (*verify) return cmd_verify(v, g, out);
    return cmd_scan(scan_b_max, digits, scan_format, out_path, g, out, err);
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace sbraid::cli
