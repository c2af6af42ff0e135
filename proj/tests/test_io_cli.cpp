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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "qfam/table_io.hpp"

using namespace qfam;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_bytes = "") {
  std::istringstream in(stdin_bytes);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, in, out, err);
  return CliRun{code, out.str(), err.str()};
}

std::string z2_json() { return R"({"n":2,"table":[[0,1],[1,0]],"label":"z2"})"; }

// Writes bytes to a unique temp file and returns the path.
std::string temp_file(const std::string& tag, const std::string& bytes) {
  const std::string path = "qfam_test_" + tag + ".json";
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << bytes;
  return path;
}

}  // namespace

TEST_CASE("parse_table accepts the documented format") {
  const io::TableFile tf = io::parse_table(z2_json());
  CHECK(tf.table.order() == 2);
  CHECK(tf.table.xi(1, 0) == 1);
  CHECK(tf.label == "z2");
  const io::TableFile bare = io::parse_table(R"({"n":1,"table":[[0]]})");
  CHECK(!bare.label.has_value());
}

TEST_CASE("parse_table rejects malformed input with precise messages") {
  const auto message_of = [](const std::string& bytes) {
    try {
      io::parse_table(bytes);
      return std::string("(no error)");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("not json").find("malformed JSON") == 0);
  CHECK(message_of("[1,2]") == "top-level value must be an object");
  CHECK(message_of(R"({"table":[[0]]})") == "field \"n\" must be an integer");
  CHECK(message_of(R"({"n":"2","table":[[0]]})") ==
        "field \"n\" must be an integer");
  CHECK(message_of(R"({"n":0,"table":[]})") ==
        "field \"n\" must be in [1, 6], got 0");
  CHECK(message_of(R"({"n":7,"table":[]})") ==
        "field \"n\" must be in [1, 6], got 7");
  CHECK(message_of(R"({"n":2})") == "field \"table\" must be an array of rows");
  CHECK(message_of(R"({"n":2,"table":[[0,1]]})") ==
        "field \"table\" has 1 rows, expected 2");
  CHECK(message_of(R"({"n":2,"table":[[0,1],[1]]})") ==
        "row 1 has 1 entries, expected 2");
  CHECK(message_of(R"({"n":2,"table":[[0,1],0]})") ==
        "row 1 must be an array");
  CHECK(message_of(R"({"n":2,"table":[[0,1.5],[1,0]]})") ==
        "entry at row 0, col 1 must be an integer");
  CHECK(message_of(R"({"n":2,"table":[[0,2],[1,0]]})") ==
        "entry 2 out of range at row 0, col 1");
  CHECK(message_of(R"({"n":2,"table":[[0,1],[-1,0]]})") ==
        "entry -1 out of range at row 1, col 0");
  CHECK(message_of(R"({"n":2,"table":[[0,1],[1,0]],"extra":1})") ==
        "unknown field \"extra\"");
  CHECK(message_of(R"({"n":2,"table":[[0,1],[1,0]],"label":3})") ==
        "field \"label\" must be a string");
}

TEST_CASE("table emission round-trips") {
  const io::TableFile tf = io::parse_table(z2_json());
  const std::string bytes = io::emit_table(tf.table, tf.label);
  const io::TableFile back = io::parse_table(bytes);
  CHECK(back.table == tf.table);
  CHECK(back.label == tf.label);
}

TEST_CASE("cli validate reports identity and associativity") {
  const CliRun r = run({"validate", "-"}, z2_json());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"associative\": true") != std::string::npos);
  CHECK(r.out.find("\"identity\": 0") != std::string::npos);
  CHECK(r.out.find("\"label\": \"z2\"") != std::string::npos);

  const CliRun bad =
      run({"validate", "-"}, R"({"n":2,"table":[[0,1],[0,0]]})");
  CHECK(bad.exit_code == 0);
  CHECK(bad.out.find("\"associative\": false") != std::string::npos);
  CHECK(bad.out.find("\"witness\"") != std::string::npos);
  CHECK(bad.out.find("\"identity\": null") != std::string::npos);
}

TEST_CASE("cli rejects bad input with exit 64") {
  const CliRun missing = run({"validate", "no_such_file.json"});
  CHECK(missing.exit_code == 64);
  CHECK(missing.err.find("cannot open table file") != std::string::npos);

  const CliRun malformed = run({"validate", "-"}, "{");
  CHECK(malformed.exit_code == 64);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);

  const CliRun range = run({"validate", "-"}, R"({"n":2,"table":[[0,2],[1,0]]})");
  CHECK(range.exit_code == 64);
  CHECK(range.err.find("entry 2 out of range at row 0, col 1") !=
        std::string::npos);

  const CliRun unknown_flag = run({"verify", "--frobnicate"});
  CHECK(unknown_flag.exit_code == 64);

  const CliRun no_sub = run({});
  CHECK(no_sub.exit_code == 64);

  const CliRun bad_dims = run({"verify", "-", "--numeric", "--dims", "2,x"},
                              z2_json());
  CHECK(bad_dims.exit_code == 64);
  CHECK(bad_dims.err.find("--dims") != std::string::npos);

  const CliRun bad_points = run({"verify", "-", "--points", "9"}, z2_json());
  CHECK(bad_points.exit_code == 64);
}

TEST_CASE("cli help exits zero") {
  const CliRun top = run({"--help"});
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("verify") != std::string::npos);
  const CliRun sub = run({"verify", "--help"});
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("--numeric") != std::string::npos);
  const CliRun version = run({"--version"});
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("cli enumerate streams labeled tables") {
  const CliRun r = run({"enumerate", "--order", "2", "--associative"});
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.find("\"label\":\"n2#" + std::to_string(count)) !=
          std::string::npos);
    ++count;
  }
  CHECK(count == 8);

  const CliRun refused = run({"enumerate", "--order", "4"});
  CHECK(refused.exit_code == 64);
  CHECK(refused.err.find("outside supported range") != std::string::npos);
}

TEST_CASE("cli gamma exports the images") {
  const CliRun r = run({"gamma", "-"}, z2_json());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"c[0,0]\": \"c[0,0]⊗c[0,0] + c[0,1]⊗c[0,1]\"") !=
        std::string::npos);
  CHECK(r.out.find("\"associative\": true") != std::string::npos);
}

TEST_CASE("cli verify exit codes track verdicts") {
  const CliRun pass = run({"verify", "-"}, z2_json());
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"verdict\": \"fail\"") == std::string::npos);

  const CliRun fail = run({"verify", "-"}, R"({"n":2,"table":[[0,1],[0,0]]})");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("\"name\": \"coassoc.delta\"") != std::string::npos);
  CHECK(fail.out.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(fail.out.find("\"witness\"") != std::string::npos);

  const CliRun inconclusive =
      run({"verify", "-", "--preset", "magicsquare"}, z2_json());
  CHECK(inconclusive.exit_code == 2);
  CHECK(inconclusive.out.find("\"verdict\": \"inconclusive\"") !=
        std::string::npos);
}

TEST_CASE("cli verify default reports are byte-identical across runs") {
  const CliRun a = run({"verify", "-", "--numeric"}, z2_json());
  const CliRun b = run({"verify", "-", "--numeric"}, z2_json());
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"elapsed\"") == std::string::npos);
  CHECK(a.out.find("\"residuals\"") != std::string::npos);
  CHECK(a.out.find("\"seed\": 14345") != std::string::npos);  // 12345+1000·2

  const CliRun timed = run({"verify", "-", "--timings"}, z2_json());
  CHECK(timed.out.find("\"elapsed\"") != std::string::npos);
}

TEST_CASE("cli verify honors numeric flags") {
  const CliRun r = run(
      {"verify", "-", "--numeric", "--dims", "2,3", "--samples", "2",
       "--seed", "7"},
      z2_json());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"name\": \"numeric.diagram.d1\"") != std::string::npos);
  CHECK(r.out.find("\"seed\": 2007") != std::string::npos);
  CHECK(r.out.find("\"seed\": 3008") != std::string::npos);
  // The magic square column sum has no numeric twin.
  const CliRun ms = run({"verify", "-", "--numeric", "--preset",
                         "magicsquare"},
                        z2_json());
  CHECK(ms.out.find("\"name\": \"gamma.col_sum\"") != std::string::npos);
  CHECK(ms.out.find("\"name\": \"numeric.gamma.col_sum\"") ==
        std::string::npos);
}

TEST_CASE("cli verify writes to a file with --out") {
  const std::string in_path = temp_file("z2_in", z2_json());
  const std::string out_path = "qfam_test_report_out.json";
  const CliRun r = run({"verify", in_path, "--out", out_path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  std::stringstream got;
  got << f.rdbuf();
  CHECK(got.str().find("\"checks\"") != std::string::npos);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("cli counit reports findings") {
  const CliRun r = run({"counit", "-"}, z2_json());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"counits\": [\n      \"(0,0)\"\n    ]") !=
        std::string::npos);
  CHECK(r.out.find("\"antipode_candidates_probed\": 4") != std::string::npos);
  CHECK(r.out.find("\"name\": \"antipode.candidate[[[0,1],[0,1]]]\"") !=
        std::string::npos);

  const CliRun none = run({"counit", "-"}, R"({"n":2,"table":[[0,0],[1,1]]})");
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("\"counits\": []") != std::string::npos);

  const CliRun refused = run({"counit", "-", "--cap", "3"}, z2_json());
  CHECK(refused.exit_code == 64);
  CHECK(!refused.err.empty());
}

TEST_CASE("cli atlas aggregates a sweep") {
  const CliRun r = run({"atlas", "--order", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"tables\": 8") != std::string::npos);
  CHECK(r.out.find("\"fail\": 0") != std::string::npos);
  const CliRun canon = run({"atlas", "--order", "2", "--canonical"});
  CHECK(canon.exit_code == 0);
  CHECK(canon.out.find("\"tables\": 5") != std::string::npos);
}
