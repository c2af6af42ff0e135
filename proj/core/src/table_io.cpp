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

#include "qfam/table_io.hpp"

#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "qfam/version.hpp"

namespace qfam::io {

using json = nlohmann::json;
using semigroup::CayleyTable;

TableFile parse_table(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("top-level value must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "table" && key != "label") {
      throw std::invalid_argument("unknown field \"" + key + "\"");
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("field \"n\" must be an integer");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > CayleyTable::kMaxOrder) {
    throw std::invalid_argument(
        "field \"n\" must be in [1, " +
        std::to_string(CayleyTable::kMaxOrder) + "], got " +
        std::to_string(n));
  }
  if (!j.contains("table") || !j["table"].is_array()) {
    throw std::invalid_argument("field \"table\" must be an array of rows");
  }
  const auto& rows = j["table"];
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("field \"table\" has " +
                                std::to_string(rows.size()) +
                                " rows, expected " + std::to_string(n));
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array()) {
      throw std::invalid_argument("row " + std::to_string(r) +
                                  " must be an array");
    }
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_number_integer()) {
        throw std::invalid_argument("entry at row " + std::to_string(r) +
                                    ", col " + std::to_string(c) +
                                    " must be an integer");
      }
      const int v = cell.get<int>();
      if (v < 0 || v >= n) {
        throw std::invalid_argument("entry " + std::to_string(v) +
                                    " out of range at row " +
                                    std::to_string(r) + ", col " +
                                    std::to_string(c));
      }
      entries.push_back(v);
    }
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw std::invalid_argument("field \"label\" must be a string");
    }
    label = j["label"].get<std::string>();
  }
  return TableFile{CayleyTable(n, std::move(entries)), std::move(label)};
}

namespace {

json table_to_json(const CayleyTable& table) {
  json rows = json::array();
  for (int r = 0; r < table.order(); ++r) {
    json row = json::array();
    for (int s = 0; s < table.order(); ++s) row.push_back(table.xi(r, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

json config_to_json(const ReportConfig& config) {
  json c;
  c["m"] = config.points;
  c["n"] = config.table.order();
  c["preset"] = starpoly::to_string(config.preset);
  c["table"] = table_to_json(config.table);
  if (config.label) c["label"] = *config.label;
  c["timings"] = config.timings;
  if (config.numeric) {
    json nm;
    nm["dims"] = config.numeric->dims;
    nm["samples"] = config.numeric->samples_per_dim;
    nm["seed"] = config.numeric->base_seed;
    nm["tolerances"] = {
        {"construction", config.numeric->tolerances.construction},
        {"identity", config.numeric->tolerances.identity},
        {"separation", config.numeric->tolerances.separation},
    };
    c["numeric"] = std::move(nm);
  }
  return c;
}

json checks_to_json(const family::VerificationReport& report, bool timings) {
  json checks = json::array();
  for (const family::CheckResult& check : report.checks()) {
    json rec;
    rec["name"] = check.name;
    rec["verdict"] = family::to_string(check.verdict);
    if (check.verdict == family::CheckVerdict::kFail) {
      rec["witness"] = check.witness;
    }
    if (!check.detail.empty()) rec["detail"] = check.detail;
    if (timings) rec["elapsed"] = check.elapsed_seconds;
    if (!check.residuals.empty()) {
      json rs = json::array();
      for (const family::ResidualSample& r : check.residuals) {
        rs.push_back(
            {{"dim", r.dim}, {"residual", r.residual}, {"seed", r.seed}});
      }
      rec["residuals"] = std::move(rs);
    }
    checks.push_back(std::move(rec));
  }
  return checks;
}

std::string finish(json j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_table(const CayleyTable& table,
                       const std::optional<std::string>& label) {
  json j;
  j["n"] = table.order();
  j["table"] = table_to_json(table);
  if (label) j["label"] = *label;
  return j.dump() + "\n";
}

std::string emit_report(const family::VerificationReport& report,
                        const ReportConfig& config) {
  json j;
  j["version"] = qfam::kVersion;
  j["config"] = config_to_json(config);
  j["checks"] = checks_to_json(report, config.timings);
  return finish(std::move(j));
}

std::string emit_gamma(const family::GammaPresentation& g,
                       const std::optional<std::string>& label,
                       bool associative) {
  json j;
  j["version"] = qfam::kVersion;
  json c;
  c["m"] = g.config().points();
  c["n"] = g.config().order();
  c["preset"] = starpoly::to_string(g.config().preset());
  c["table"] = table_to_json(g.config().table());
  c["associative"] = associative;
  if (label) c["label"] = *label;
  j["config"] = std::move(c);
  json images;
  for (const auto& [gener, image] : g.images()) {
    images["c[" + std::to_string(gener.row) + "," +
           std::to_string(gener.col) + "]"] = tensorspace::to_string(image);
  }
  j["images"] = std::move(images);
  return finish(std::move(j));
}

std::string emit_validate(const CayleyTable& table,
                          const semigroup::AssociativityResult& result,
                          const std::optional<std::string>& label) {
  json j;
  j["version"] = qfam::kVersion;
  j["n"] = table.order();
  j["table"] = table_to_json(table);
  if (label) j["label"] = *label;
  if (const auto* witness = std::get_if<semigroup::NonAssocWitness>(&result)) {
    j["associative"] = false;
    j["witness"] = witness->to_string();
  } else {
    j["associative"] = true;
  }
  const std::optional<int> identity = semigroup::find_identity(table);
  j["identity"] = identity ? json(*identity) : json(nullptr);
  return finish(std::move(j));
}

std::string emit_enumerate_line(const CayleyTable& table,
                                const std::string& label) {
  json j;
  j["label"] = label;
  j["n"] = table.order();
  j["table"] = table_to_json(table);
  return j.dump() + "\n";
}

std::string emit_counit_report(const family::VerificationReport& report,
                               const ReportConfig& config,
                               const CounitFindings& findings) {
  json j;
  j["version"] = qfam::kVersion;
  j["config"] = config_to_json(config);
  j["checks"] = checks_to_json(report, config.timings);
  json f;
  f["candidates_searched"] = findings.candidates_searched;
  f["counits"] = findings.counits;
  json antipodes = json::array();
  for (const auto& a : findings.antipodes) {
    antipodes.push_back({{"counit", a.counit}, {"sigma", a.sigma}});
  }
  f["antipodes"] = std::move(antipodes);
  f["antipode_candidates_probed"] = findings.antipode_candidates_probed;
  f["antipode_search_restricted"] = findings.antipode_search_restricted;
  j["findings"] = std::move(f);
  return finish(std::move(j));
}

std::string emit_atlas(const AtlasSummary& summary) {
  json j;
  j["version"] = qfam::kVersion;
  j["order"] = summary.order;
  j["points"] = summary.points;
  j["preset"] = starpoly::to_string(summary.preset);
  j["tables"] = summary.tables;
  j["checks"] = summary.checks;
  j["pass"] = summary.pass;
  j["fail"] = summary.fail;
  j["inconclusive"] = summary.inconclusive;
  j["failing_tables"] = summary.failing_tables;
  j["inconclusive_tables"] = summary.inconclusive_tables;
  return finish(std::move(j));
}

}  // namespace qfam::io
