// Copyright 2026 The qfam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qfam/family.hpp"
#include "qfam/numrep.hpp"
#include "qfam/report.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"
#include "qfam/table_io.hpp"
#include "qfam/version.hpp"

namespace qfam::cli {
namespace {

io::TableFile load_table(const std::string& path, std::istream& in) {
  std::string bytes;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open table file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    bytes = ss.str();
  }
  return io::parse_table(bytes);
}

void write_output(const std::string& bytes,
                  const std::optional<std::string>& out_path,
                  std::ostream& out) {
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) {
      throw std::invalid_argument("cannot open output file: " + *out_path);
    }
    f << bytes;
  } else {
    out << bytes;
  }
}

starpoly::RelationPreset parse_preset(const std::string& name) {
  if (name == "allmaps") return starpoly::RelationPreset::kAllMaps;
  if (name == "magicsquare") return starpoly::RelationPreset::kMagicSquare;
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<int> parse_dims(const std::string& csv) {
  std::vector<int> dims;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--dims entry is not an integer: " + piece);
    }
    if (used != piece.size() || d < 1 || d > 64) {
      throw std::invalid_argument("--dims entries must be integers in [1,64]: " +
                                  piece);
    }
    dims.push_back(d);
  }
  if (dims.empty()) throw std::invalid_argument("--dims must not be empty");
  return dims;
}

// Default probe words for the multiplicativity check: single generators
// touching the first row, a second row when available, and the last cell.
std::array<starpoly::NCWord, 3> default_probe_words(int points, int order) {
  const int second = std::min(1, points - 1);
  return {starpoly::NCWord{starpoly::gen(0, 0)},
          starpoly::NCWord{starpoly::gen(second, 0)},
          starpoly::NCWord{starpoly::gen(points - 1, order - 1)}};
}

std::vector<family::CheckPlan> verification_plans(
    const family::GammaPresentation& gamma) {
  const family::QFamConfig& config = gamma.config();
  std::vector<family::CheckPlan> plans = family::plan_gamma_well_defined(gamma);
  plans.push_back(family::plan_diagram_d1(gamma));
  plans.push_back(family::plan_e1(gamma));
  plans.push_back(family::plan_e2(
      config.universe(), config.points(),
      default_probe_words(config.points(), config.order())));
  plans.push_back(family::plan_coassoc_delta(config));
  plans.push_back(family::plan_coassoc_gamma(gamma));
  return plans;
}

int cmd_validate(const std::string& table_arg,
                 const std::optional<std::string>& out_path, std::istream& in,
                 std::ostream& out) {
  const io::TableFile tf = load_table(table_arg, in);
  const semigroup::AssociativityResult result =
      semigroup::validate_associativity(tf.table);
  write_output(io::emit_validate(tf.table, result, tf.label), out_path, out);
  return kExitPass;
}

int cmd_enumerate(int order, bool associative, bool canonical,
                  const std::optional<std::string>& out_path,
                  std::ostream& out) {
  semigroup::EnumerateOptions opts;
  opts.filter = associative ? semigroup::TableFilter::kAssociativeOnly
                            : semigroup::TableFilter::kAllMagmas;
  opts.canonical_only = canonical;
  semigroup::TableEnumerator en(order, opts);
  std::string stream;
  int idx = 0;
  while (std::optional<semigroup::CayleyTable> t = en.next()) {
    const std::string label =
        "n" + std::to_string(order) + "#" + std::to_string(idx++);
    stream += io::emit_enumerate_line(*t, label);
  }
  write_output(stream, out_path, out);
  return kExitPass;
}

int cmd_gamma(const std::string& table_arg, std::optional<int> points,
              const std::string& preset_name,
              const std::optional<std::string>& out_path, std::istream& in,
              std::ostream& out) {
  const io::TableFile tf = load_table(table_arg, in);
  const int m = points.value_or(tf.table.order());
  const starpoly::RelationPreset preset = parse_preset(preset_name);
  const family::QFamConfig config =
      family::QFamConfig::unchecked(m, tf.table, preset);
  const family::GammaPresentation gamma = family::build_gamma(config);
  const bool associative = std::holds_alternative<semigroup::SemigroupRecord>(
      semigroup::validate_associativity(tf.table));
  write_output(io::emit_gamma(gamma, tf.label, associative), out_path, out);
  return kExitPass;
}

int cmd_verify(const std::string& table_arg, std::optional<int> points,
               const std::string& preset_name, bool timings, bool numeric,
               const std::string& dims_csv, int samples, std::uint64_t seed,
               const std::optional<std::string>& out_path, std::istream& in,
               std::ostream& out) {
  const io::TableFile tf = load_table(table_arg, in);
  const int m = points.value_or(tf.table.order());
  const starpoly::RelationPreset preset = parse_preset(preset_name);
  const family::QFamConfig config =
      family::QFamConfig::unchecked(m, tf.table, preset);
  const family::GammaPresentation gamma = family::build_gamma(config);

  std::optional<io::NumericConfig> numeric_config;
  if (numeric) {
    numeric_config = io::NumericConfig{parse_dims(dims_csv), samples, seed,
                                       numrep::Tolerances{}};
  }

  family::VerificationReport report;
  for (const family::CheckPlan& plan : verification_plans(gamma)) {
    family::CheckResult result = family::run_plan(plan, preset);
    const family::CheckVerdict symbolic = result.verdict;
    report.add(std::move(result));
    // Sampled representations satisfy the all-maps relations only, so the
    // magic-square column sum has no numeric twin.
    if (numeric_config && plan.name != "gamma.col_sum") {
      report.add(numrep::numeric_mirror(
          plan, symbolic, numeric_config->dims,
          numeric_config->samples_per_dim, numeric_config->base_seed,
          numeric_config->tolerances));
    }
  }

  const io::ReportConfig rc{m,      tf.table, tf.label,
                            preset, timings,  numeric_config};
  write_output(io::emit_report(report, rc), out_path, out);
  return report.exit_code();
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

int cmd_counit(const std::string& table_arg, std::optional<int> points,
               const std::string& preset_name, std::uint64_t cap,
               bool timings, const std::optional<std::string>& out_path,
               std::istream& in, std::ostream& out) {
  const io::TableFile tf = load_table(table_arg, in);
  const int m = points.value_or(tf.table.order());
  const int n = tf.table.order();
  const starpoly::RelationPreset preset = parse_preset(preset_name);
  const family::QFamConfig config =
      family::QFamConfig::unchecked(m, tf.table, preset);
  const family::GammaPresentation gamma = family::build_gamma(config);

  family::CounitSearchOptions opts;
  opts.cap = cap;
  const auto started = std::chrono::steady_clock::now();
  const std::vector<family::CounitCandidate> counits =
      family::search_counit(gamma, opts);  // domain_error when over cap
  const double search_elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();

  std::uint64_t space = 1;
  for (int x = 0; x < m; ++x) space *= static_cast<std::uint64_t>(n);

  io::CounitFindings findings;
  findings.candidates_searched = space;
  for (const family::CounitCandidate& eps : counits) {
    findings.counits.push_back(eps.to_string());
  }

  family::VerificationReport report;
  report.add(family::CheckResult{
      "counit.search", family::CheckVerdict::kPass, "",
      std::to_string(space) + " candidates, " +
          std::to_string(counits.size()) + " counits",
      search_elapsed,
      {}});
  for (const family::CounitCandidate& eps : counits) {
    report.add(family::CheckResult{"counit.candidate[" + eps.to_string() + "]",
                                   family::CheckVerdict::kPass, "",
                                   "both axioms hold on every generator", 0.0,
                                   {}});
  }

  if (!counits.empty()) {
    const std::vector<std::vector<int>> perms = permutations_of(n);
    // Full product enumeration only while the tuple space stays tiny;
    // beyond that probe row-uniform candidates (the same permutation on
    // every row) and flag the restriction.
    std::uint64_t tuple_space = 1;
    bool restricted = false;
    for (int x = 0; x < m && !restricted; ++x) {
      tuple_space *= perms.size();
      if (tuple_space > 720) restricted = true;
    }
    findings.antipode_search_restricted = restricted;

    std::uint64_t probed = 0;
    for (const family::CounitCandidate& eps : counits) {
      auto probe = [&](const family::AntipodeCandidate& s) {
        ++probed;
        family::CheckResult result =
            family::check_antipode_candidate(gamma, s, eps);
        if (result.verdict == family::CheckVerdict::kPass) {
          findings.antipodes.push_back(
              io::CounitFindings::AntipodePass{eps.to_string(),
                                               s.to_string()});
          report.add(std::move(result));
        }
      };
      if (restricted) {
        for (const std::vector<int>& p : perms) {
          probe(family::AntipodeCandidate{
              std::vector<std::vector<int>>(static_cast<std::size_t>(m), p)});
        }
      } else {
        std::vector<std::size_t> digit(static_cast<std::size_t>(m), 0);
        for (;;) {
          family::AntipodeCandidate s;
          s.sigma.reserve(digit.size());
          for (std::size_t d : digit) s.sigma.push_back(perms[d]);
          probe(s);
          int x = m - 1;
          while (x >= 0) {
            if (++digit[static_cast<std::size_t>(x)] < perms.size()) break;
            digit[static_cast<std::size_t>(x)] = 0;
            --x;
          }
          if (x < 0) break;
        }
      }
    }
    findings.antipode_candidates_probed = probed;
    report.add(family::CheckResult{
        "antipode.search", family::CheckVerdict::kPass, "",
        std::to_string(probed) + " candidates probed, " +
            std::to_string(findings.antipodes.size()) + " antipodes" +
            (restricted ? " (row-uniform restriction)" : ""),
        0.0,
        {}});
  }

  const io::ReportConfig rc{m,      tf.table, tf.label,
                            preset, timings,  std::nullopt};
  write_output(io::emit_counit_report(report, rc, findings), out_path, out);
  return report.exit_code();
}

int cmd_atlas(int order, std::optional<int> points,
              const std::string& preset_name, bool canonical,
              const std::optional<std::string>& out_path, std::ostream& out) {
  const int m = points.value_or(order);
  const starpoly::RelationPreset preset = parse_preset(preset_name);
  semigroup::EnumerateOptions opts;
  opts.filter = semigroup::TableFilter::kAssociativeOnly;
  opts.canonical_only = canonical;
  semigroup::TableEnumerator en(order, opts);

  io::AtlasSummary summary;
  summary.order = order;
  summary.points = m;
  summary.preset = preset;
  int idx = 0;
  while (std::optional<semigroup::CayleyTable> t = en.next()) {
    const std::string label =
        "n" + std::to_string(order) + "#" + std::to_string(idx++);
    const family::QFamConfig config = family::QFamConfig::make(m, *t, preset);
    const family::GammaPresentation gamma = family::build_gamma(config);
    family::VerificationReport report;
    for (const family::CheckPlan& plan : verification_plans(gamma)) {
      report.add(family::run_plan(plan, preset));
    }
    ++summary.tables;
    bool failed = false;
    bool undecided = false;
    for (const family::CheckResult& check : report.checks()) {
      ++summary.checks;
      switch (check.verdict) {
        case family::CheckVerdict::kPass:
          ++summary.pass;
          break;
        case family::CheckVerdict::kFail:
          ++summary.fail;
          failed = true;
          break;
        case family::CheckVerdict::kInconclusive:
          ++summary.inconclusive;
          undecided = true;
          break;
      }
    }
    if (failed) summary.failing_tables.push_back(label);
    if (undecided) summary.inconclusive_tables.push_back(label);
  }
  write_output(io::emit_atlas(summary), out_path, out);
  if (summary.fail > 0) return kExitFail;
  if (summary.inconclusive > 0) return kExitInconclusive;
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum families of maps: construction and verification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::vector<std::string> presets{"allmaps", "magicsquare"};

  auto* validate = app.add_subcommand(
      "validate", "Check a Cayley table for associativity and identity");
  std::string v_table;
  validate->add_option("table", v_table, "table file (JSON), or - for stdin")
      ->required();
  std::optional<std::string> v_out;
  validate->add_option("--out", v_out, "write the report to a file");

  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream Cayley tables of a given order as JSON lines");
  int e_order = 0;
  enumerate->add_option("--order", e_order, "table order n")->required();
  bool e_assoc = false;
  enumerate->add_flag("--associative", e_assoc, "associative tables only");
  bool e_canonical = false;
  enumerate->add_flag("--canonical", e_canonical,
                      "smallest relabeling representatives only");
  std::optional<std::string> e_out;
  enumerate->add_option("--out", e_out, "write the stream to a file");

  auto* gamma = app.add_subcommand(
      "gamma", "Construct and export the comultiplication");
  std::string g_table;
  gamma->add_option("table", g_table, "table file (JSON), or - for stdin")
      ->required();
  std::optional<int> g_points;
  gamma
      ->add_option("--points", g_points,
                   "number of points m (default: table order)")
      ->check(CLI::Range(1, 6));
  std::string g_preset = "allmaps";
  gamma->add_option("--preset", g_preset, "relation preset")
      ->check(CLI::IsMember(presets));
  std::optional<std::string> g_out;
  gamma->add_option("--out", g_out, "write the export to a file");

  auto* verify = app.add_subcommand(
      "verify", "Verify the comultiplication identities");
  std::string w_table;
  verify->add_option("table", w_table, "table file (JSON), or - for stdin")
      ->required();
  std::optional<int> w_points;
  verify
      ->add_option("--points", w_points,
                   "number of points m (default: table order)")
      ->check(CLI::Range(1, 6));
  std::string w_preset = "allmaps";
  verify->add_option("--preset", w_preset, "relation preset")
      ->check(CLI::IsMember(presets));
  bool w_timings = false;
  verify->add_flag("--timings", w_timings,
                   "include elapsed seconds per check (breaks byte-identical "
                   "output)");
  bool w_numeric = false;
  verify->add_flag("--numeric", w_numeric,
                   "mirror each check on sampled matrix representations");
  std::string w_dims = "2,4,8";
  verify->add_option("--dims", w_dims,
                     "comma-separated representation dimensions");
  int w_samples = 1;
  verify->add_option("--samples", w_samples, "representations per dimension")
      ->check(CLI::Range(1, 1000));
  std::uint64_t w_seed = 12345;
  verify->add_option("--seed", w_seed, "base seed for sampled representations");
  std::optional<std::string> w_out;
  verify->add_option("--out", w_out, "write the report to a file");

  auto* counit = app.add_subcommand(
      "counit", "Search for counits and probe antipode candidates");
  std::string c_table;
  counit->add_option("table", c_table, "table file (JSON), or - for stdin")
      ->required();
  std::optional<int> c_points;
  counit
      ->add_option("--points", c_points,
                   "number of points m (default: table order)")
      ->check(CLI::Range(1, 6));
  std::string c_preset = "allmaps";
  counit->add_option("--preset", c_preset, "relation preset")
      ->check(CLI::IsMember(presets));
  std::uint64_t c_cap = 1'000'000;
  counit->add_option("--cap", c_cap,
                     "largest candidate space n^m the search will enumerate");
  bool c_timings = false;
  counit->add_flag("--timings", c_timings,
                   "include elapsed seconds per check");
  std::optional<std::string> c_out;
  counit->add_option("--out", c_out, "write the report to a file");

  auto* atlas = app.add_subcommand(
      "atlas", "Verify every associative table of a given order");
  int a_order = 0;
  atlas->add_option("--order", a_order, "table order n")->required();
  std::optional<int> a_points;
  atlas
      ->add_option("--points", a_points,
                   "number of points m (default: table order)")
      ->check(CLI::Range(1, 6));
  std::string a_preset = "allmaps";
  atlas->add_option("--preset", a_preset, "relation preset")
      ->check(CLI::IsMember(presets));
  bool a_canonical = false;
  atlas->add_flag("--canonical", a_canonical,
                  "smallest relabeling representatives only");
  std::optional<std::string> a_out;
  atlas->add_option("--out", a_out, "write the summary to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(v_table, v_out, in, out);
    if (*enumerate) {
      return cmd_enumerate(e_order, e_assoc, e_canonical, e_out, out);
    }
    if (*gamma) return cmd_gamma(g_table, g_points, g_preset, g_out, in, out);
    if (*verify) {
      return cmd_verify(w_table, w_points, w_preset, w_timings, w_numeric,
                        w_dims, w_samples, w_seed, w_out, in, out);
    }
    if (*counit) {
      return cmd_counit(c_table, c_points, c_preset, c_cap, c_timings, c_out,
                        in, out);
    }
    if (*atlas) {
      return cmd_atlas(a_order, a_points, a_preset, a_canonical, a_out, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace qfam::cli
