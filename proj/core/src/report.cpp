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

#include "qfam/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfam::family {

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::kPass:
      return "pass";
    case CheckVerdict::kFail:
      return "fail";
    case CheckVerdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

CheckVerdict verdict_from(starpoly::Verdict v) {
  switch (v) {
    case starpoly::Verdict::kEqual:
      return CheckVerdict::kPass;
    case starpoly::Verdict::kNotEqual:
      return CheckVerdict::kFail;
    case starpoly::Verdict::kInconclusive:
      return CheckVerdict::kInconclusive;
  }
  return CheckVerdict::kFail;
}

void VerificationReport::add(CheckResult result) {
  if (has(result.name)) {
    throw std::invalid_argument("duplicate check name: " + result.name);
  }
  checks_.push_back(std::move(result));
}

bool VerificationReport::has(const std::string& name) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&](const CheckResult& c) { return c.name == name; });
}

const CheckResult& VerificationReport::at(const std::string& name) const {
  for (const CheckResult& c : checks_) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

int VerificationReport::count(CheckVerdict v) const {
  return static_cast<int>(
      std::count_if(checks_.begin(), checks_.end(),
                    [&](const CheckResult& c) { return c.verdict == v; }));
}

int VerificationReport::exit_code() const {
  if (count(CheckVerdict::kFail) > 0) return 1;
  if (count(CheckVerdict::kInconclusive) > 0) return 2;
  return 0;
}

}  // namespace qfam::family
