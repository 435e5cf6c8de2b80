/*
   Copyright 2026 The xalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "xalg/cli/catalog.hpp"
#include "xalg/cli/commands.hpp"
#include "xalg/cli/definition.hpp"
#include "xalg/error.hpp"

using namespace xalg;
using namespace xalg::cli;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  try {
    parse_definitions(text, "test.xalg");
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::ValidationError;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::string& command, const std::vector<std::string>& args, RunOptions options = {}) {
  std::ostringstream out, err;
  const int status = run(command, args, options, out, err);
  return {status, out.str(), err.str()};
}

const char* kSmall = R"(modulus: 3
algebras:
  A:
    dim: 2
    products:
      "0 0": [1, 0]
      "0 1": [0, 1]
  Z:
    dim: 1
    mul:
      - [[0]]
morphisms:
  proj:
    source: A
    target: Q
    matrix: [[1, 0]]
)";

}  // namespace

TEST_CASE("empty definition file") {
  const DefinitionFile d = parse_definitions("", "empty.xalg");
  CHECK(d.algebras.empty());
  CHECK(d.xmods.empty());
  CHECK_FALSE(d.field.has_value());
}

TEST_CASE("dangling references are reported") {
  std::string msg;
  CHECK(parse_kind(kSmall, &msg) == ErrorKind::DanglingReference);
  CHECK(msg.find("Q") != std::string::npos);
  CHECK_THROWS_AS(parse_definitions("modulus: 2\n").xmod("nope"), Error);
}

TEST_CASE("syntax errors carry a line number") {
  std::string msg;
  CHECK(parse_kind("modulus: 2\nalgebras:\n  A: [1, 2\n", &msg) == ErrorKind::SyntaxError);
  CHECK(msg.find("test.xalg:") != std::string::npos);
  CHECK(parse_kind("- 1\n- 2\n") == ErrorKind::SyntaxError);
}

TEST_CASE("invalid objects become validation errors") {
  std::string msg;
  const char* sparse = R"(modulus: 2
algebras:
  B:
    dim: 2
    products:
      "1 1": [0, 1]
)";
  // Sparse products are mirrored, so the asymmetric table has to be dense.
  const char* dense = R"(modulus: 2
algebras:
  B:
    dim: 2
    mul:
      - [[0, 0], [1, 0]]
      - [[0, 0], [0, 0]]
)";
  CHECK_NOTHROW(parse_definitions(sparse, "ok.xalg"));
  CHECK(parse_kind(dense, &msg) == ErrorKind::ValidationError);
  CHECK(msg.find("NotCommutative") != std::string::npos);
  CHECK(parse_kind("modulus: 4\n") == ErrorKind::ValidationError);
}

TEST_CASE("the bundled catalog loads") {
  const DefinitionFile d = builtin_definitions();
  REQUIRE(d.field.has_value());
  CHECK(d.field->modulus() == 2);
  CHECK(d.algebra("T3").dim() == 3);
  CHECK(d.ideal("x").dim() == 2);
  CHECK(d.ideal("x2").dim() == 1);
  CHECK(d.morphism("via-projection").is_surjective());
  CHECK(d.xmods.size() >= 8);
  CHECK(d.algebra("P").dim() == 5);
}

TEST_CASE("the bundled catalog matches the file in the source tree") {
  std::ifstream in(std::string(XALG_SOURCE_DIR) + "/catalog/t3.xalg");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(builtin_definitions_text()));
}

TEST_CASE("verify and pullback commands") {
  const Outcome v = run_cli("verify", {"t3-ideal-xmod"});
  CHECK(v.status == 0);
  CHECK(v.out.find("result: PASS") != std::string::npos);

  RunOptions json;
  json.format = "json";
  const Outcome p = run_cli("pullback", {"zero-into-F2", "via-projection"}, json);
  CHECK(p.status == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["command"] == "pullback");
  CHECK(j["summary"]["passed"] == true);
  bool saw_dim2 = false;
  for (const auto& s : j["sections"])
    if (s["objects"].contains("pullback")) saw_dim2 = s["objects"]["pullback"]["top_dim"] == 2;
  CHECK(saw_dim2);
}

TEST_CASE("every command runs on bundled names") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> calls{
      {"verify", {}},
      {"induce", {"t3-ideal-xmod", "via-projection"}},
      {"induce-epi", {"t3-ideal-xmod", "via-projection"}},
      {"induce-ideal", {"T3", "x", "x2"}},
      {"adjunction", {"via-projection", "t3-ideal-xmod", "id-F2-xmod"}},
      {"free", {"koszul-f"}},
      {"free", {"koszul-f", "t3-ideal-xmod"}},
      {"koszul", {"koszul-f"}},
      {"multiplier", {"T3"}},
  };
  for (const auto& [cmd, args] : calls) {
    CAPTURE(cmd);
    const Outcome o = run_cli(cmd, args);
    CHECK(o.status == 0);
    CHECK(o.err.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli("frobnicate", {}).status == 2);
  CHECK(run_cli("pullback", {"zero-into-F2"}).status == 2);
  CHECK(run_cli("verify", {"no-such-xmod"}).status == 2);
  CHECK(run_cli("multiplier", {"N"}).status == 1);

  RunOptions tiny;
  tiny.search.max_search = 1;
  CHECK(run_cli("induce-epi", {"t3-ideal-xmod", "via-projection"}, tiny).status == 3);

  const auto dir = std::filesystem::temp_directory_path() / "xalg_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.xalg";
  std::ofstream(bad) << "algebras: [\n";
  RunOptions with_file;
  with_file.file = bad.string();
  CHECK(run_cli("verify", {}, with_file).status == 2);
  with_file.file = (dir / "missing.xalg").string();
  CHECK(run_cli("verify", {}, with_file).status == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("definition files from disk") {
  const auto dir = std::filesystem::temp_directory_path() / "xalg_cli_disk";
  std::filesystem::create_directories(dir);
  const auto path = dir / "f5.xalg";
  std::ofstream(path) << R"(modulus: 5
algebras:
  T:
    dim: 2
    products:
      "0 0": [1, 0]
      "0 1": [0, 1]
ideals:
  y:
    algebra: T
    generators: [[0, 1]]
xmods:
  incl:
    kind: inclusion
    ideal: y
  mult:
    kind: multiplication
    algebra: T
)";
  RunOptions o;
  o.file = path.string();
  const Outcome v = run_cli("verify", {}, o);
  CHECK(v.status == 0);
  CHECK(v.out.find("incl") != std::string::npos);
  CHECK(v.out.find("mult") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic without timing") {
  RunOptions json;
  json.format = "json";
  const Outcome a = run_cli("catalog", {}, json);
  const Outcome b = run_cli("catalog", {}, json);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  json.timing = true;
  CHECK(run_cli("catalog", {}, json).out.find("elapsed_ms") != std::string::npos);
}
