// Copyright 2026 The mixedgraphs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the command-line surface. The binary path comes from
// the MIXEDGRAPHS_CLI environment variable (set by the ctest registration).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "test_util.hpp"

using mixedgraphs::testutil::quoted;
using mixedgraphs::testutil::run_command;

namespace {

std::string cli_path() {
  const char* path = std::getenv("MIXEDGRAPHS_CLI");
  REQUIRE_MESSAGE(path != nullptr, "MIXEDGRAPHS_CLI must point to the binary");
  return path;
}

std::string write_temp_graph(const std::string& name,
                             const std::string& content) {
  const std::string path = "cli_test_" + name + ".graph";
  std::ofstream file(path, std::ios::binary);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("check reports the witness for a single arc") {
  const std::string path = write_temp_graph("arc", "n 2 e 0 a 1\nA 0 1\n");
  const auto result =
      run_command(quoted(cli_path()) + " check --input " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output == "self-converse: yes, witness (0 1)\n");
}

TEST_CASE("check reports a negative verdict") {
  const std::string path =
      write_temp_graph("nsc", "n 3 e 1 a 1\nA 0 1\nE 1 2\n");
  const auto result =
      run_command(quoted(cli_path()) + " check --input " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output == "self-converse: no\n");
}

TEST_CASE("check rejects malformed input with a nonzero exit") {
  const std::string path = write_temp_graph("bad", "not a graph\n");
  const auto result =
      run_command(quoted(cli_path()) + " check --input " + path);
  CHECK(result.exit_code != 0);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("mc selfconverse at n=2 is certain") {
  const auto result = run_command(
      quoted(cli_path()) + " mc selfconverse --n 2 --trials 100 --seed 7");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("estimate: 1.0") != std::string::npos);
  CHECK(result.output.find("seed: 7") != std::string::npos);
}

TEST_CASE("census table includes the first reference row") {
  const auto result =
      run_command(quoted(cli_path()) + " census --min-n 3 --max-n 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("6.25e-1") != std::string::npos);
}

TEST_CASE("census verify fails loudly when the range has no references") {
  const auto verify = run_command(quoted(cli_path()) +
                                  " census --min-n 3 --max-n 6 --verify");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("verify: all 4 reference values match") !=
        std::string::npos);
}

TEST_CASE("identical arguments give byte-identical json and csv") {
  for (const std::string args :
       {" census --min-n 1 --max-n 8 --format json",
        " census --min-n 1 --max-n 8 --format csv",
        " mc asymmetry --n 9 --trials 60 --seed 3 --format json",
        " oracle --n 3 --format json"}) {
    const auto first = run_command(quoted(cli_path()) + args);
    const auto second = run_command(quoted(cli_path()) + args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
  }
}

TEST_CASE("spectrum on a seeded random graph is reproducible and cospectral") {
  const std::string args =
      quoted(cli_path()) + " spectrum --random --n 5 --seed 9";
  const auto first = run_command(args);
  const auto second = run_command(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("cospectral with converse: yes") !=
        std::string::npos);
}

TEST_CASE("--output writes exactly what stdout would carry") {
  const std::string json_path = "cli_test_census_out.json";
  const auto to_file =
      run_command(quoted(cli_path()) + " census --min-n 3 --max-n 4 " +
                  "--format json --output " + json_path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream file(json_path, std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(file)),
                      std::istreambuf_iterator<char>());
  const auto to_stdout = run_command(quoted(cli_path()) +
                                     " census --min-n 3 --max-n 4 --format json");
  CHECK(written == to_stdout.output);
}
