// Copyright 2026 The moebius Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing,
// software distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions
// and limitations under the License.

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "moebius/cli/cli.hpp"

using namespace moebius;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "moebius");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriangle = std::string(MOEBIUS_TEST_DATA) + "/triangle.json";

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--only", "statement9"}).code == kExitUsage);
  CHECK(run_cli({"lambda1", "--width", "-1"}).code == kExitUsage);
  CHECK(run_cli({"band", "analyze", "/nonexistent/band.json"}).code == kExitUsage);
}

TEST_CASE("cli: help documents the precision cap") {
  Run r = run_cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MOEBIUS_PRECISION_CAP") != std::string::npos);
  CHECK(r.out.find("--only") == std::string::npos);  // subcommand flags live under the subcommand
  Run v = run_cli({"verify", "--help"});
  CHECK(v.out.find("--only") != std::string::npos);
}

TEST_CASE("cli: lambda1 prints the enclosure") {
  Run r = run_cli({"lambda1", "--width", "1e-12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("1.69497") != std::string::npos);
}

TEST_CASE("cli: verify a single certificate") {
  Run r = run_cli({"verify", "--only", "statement1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("statement1") != std::string::npos);
  CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("cli: band analyze reports the sign sequence") {
  Run r = run_cli({"band", "analyze", kTriangle});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["signs"] == nlohmann::json({1, -1, 1, -1}));
  CHECK(j["triangles"] == 4);
  CHECK(j["t_pattern"]["found"] == true);
}

TEST_CASE("cli: band analyze is deterministic") {
  Run a = run_cli({"band", "analyze", kTriangle, "--seed", "7"});
  Run b = run_cli({"band", "analyze", kTriangle, "--seed", "7"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}
