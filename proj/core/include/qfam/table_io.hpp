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

// File formats: Cayley tables in and reports out, both JSON. Emission is
// canonical — keys sorted, deterministic array order, shortest-round-trip
// numbers — so identical runs produce byte-identical bytes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfam/family.hpp"
#include "qfam/numrep.hpp"
#include "qfam/report.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"

namespace qfam::io {

/// A parsed table file: {"n": <int>, "table": [[<int>…]…],
/// "label": <string, optional>}.
struct TableFile {
  semigroup::CayleyTable table;
  std::optional<std::string> label;
};

/// Strict parse of the table format with field-precise error messages
/// (e.g. "entry 2 out of range at row 0, col 1"); throws
/// std::invalid_argument on any defect, including unknown fields.
TableFile parse_table(const std::string& bytes);

/// Canonical emission; parse_table(emit_table(t)) round-trips.
std::string emit_table(const semigroup::CayleyTable& table,
                       const std::optional<std::string>& label = std::nullopt);

/// Echo of the run configuration embedded in every report.
struct NumericConfig {
  std::vector<int> dims;
  int samples_per_dim = 1;
  std::uint64_t base_seed = 0;
  numrep::Tolerances tolerances;
};

struct ReportConfig {
  int points = 0;
  semigroup::CayleyTable table;
  std::optional<std::string> label;
  starpoly::RelationPreset preset = starpoly::RelationPreset::kAllMaps;
  bool timings = false;  // include elapsed fields (breaks byte-identity)
  std::optional<NumericConfig> numeric;
};

/// Canonical report bytes: version, config echo, check records in insertion
/// order. Elapsed times appear only when config.timings is set, keeping the
/// default output byte-identical across repeated runs.
std::string emit_report(const family::VerificationReport& report,
                        const ReportConfig& config);

/// Comultiplication export: generator → canonical image rendering.
std::string emit_gamma(const family::GammaPresentation& g,
                       const std::optional<std::string>& label,
                       bool associative);

/// Associativity + identity report for the validate subcommand.
std::string emit_validate(const semigroup::CayleyTable& table,
                          const semigroup::AssociativityResult& result,
                          const std::optional<std::string>& label);

/// One enumerate output line (newline-delimited JSON stream).
std::string emit_enumerate_line(const semigroup::CayleyTable& table,
                                const std::string& label);

/// Counit/antipode experiment findings echoed alongside the checks.
struct CounitFindings {
  std::uint64_t candidates_searched = 0;
  std::vector<std::string> counits;  // candidate renderings, search order
  struct AntipodePass {
    std::string counit;
    std::string sigma;
  };
  std::vector<AntipodePass> antipodes;
  std::uint64_t antipode_candidates_probed = 0;
  bool antipode_search_restricted = false;  // row-uniform fallback in effect
};

std::string emit_counit_report(const family::VerificationReport& report,
                               const ReportConfig& config,
                               const CounitFindings& findings);

/// Aggregate of a batch verify sweep.
struct AtlasSummary {
  int order = 0;
  int points = 0;
  starpoly::RelationPreset preset = starpoly::RelationPreset::kAllMaps;
  int tables = 0;
  int checks = 0;
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  std::vector<std::string> failing_tables;
  std::vector<std::string> inconclusive_tables;
};

std::string emit_atlas(const AtlasSummary& summary);

}  // namespace qfam::io
