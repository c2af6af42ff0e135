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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfam/starpoly.hpp"

namespace qfam::family {

enum class CheckVerdict { kPass, kFail, kInconclusive };

std::string to_string(CheckVerdict v);

/// Maps a symbolic equality verdict to a check verdict.
CheckVerdict verdict_from(starpoly::Verdict v);

/// One numeric confirmation sample: the largest residual observed for a
/// check's identities in the representation drawn at (dim, seed).
struct ResidualSample {
  int dim = 0;
  std::uint64_t seed = 0;
  double residual = 0.0;
};

/// Outcome of a single named check.
struct CheckResult {
  std::string name;
  CheckVerdict verdict = CheckVerdict::kPass;
  std::string witness;  // populated on Fail: offending instance rendering
  std::string detail;   // optional informational notes
  double elapsed_seconds = 0.0;
  std::vector<ResidualSample> residuals;  // numeric checks only
};

/// An ordered collection of check results with unique names.
class VerificationReport {
 public:
  /// Appends a result; a duplicate name throws std::invalid_argument
  /// (every requested check appears exactly once).
  void add(CheckResult result);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool has(const std::string& name) const;
  const CheckResult& at(const std::string& name) const;

  int count(CheckVerdict v) const;
  bool all_pass() const { return count(CheckVerdict::kPass) == size(); }
  int size() const { return static_cast<int>(checks_.size()); }

  /// 0 when every check passed; 1 when any check failed; 2 when nothing
  /// failed but some check was inconclusive.
  int exit_code() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace qfam::family
