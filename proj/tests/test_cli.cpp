/*
 * Copyright 2026 The ccs-seeds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ccs/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ccs");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = ccs::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kP1 = "!a.(b.0|a.c.0)|!a.(c.0|a.b.0)";
const char* kP2 = "!a.b.0|!a.c.0";

}  // namespace

TEST_CASE("check on the motivating pair") {
  const auto r = run({"check", kP1, kP2});
  CHECK(r.code == 0);
  CHECK(r.out == "bisimilar\nseed: !a.b.0 | !a.c.0\n");
}

TEST_CASE("check on nil") {
  const auto r = run({"check", "0", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("bisimilar\n", 0) == 0);
}

TEST_CASE("check with a distinguisher") {
  const auto r = run({"check", "!a.b.0", "!a.c.0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not bisimilar") == 0);
  CHECK(r.out.find("distinguisher (depth 2)") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"check", "!a.b.0", "!a.c.0", "--json", "--oracle"}).out);
  CHECK(j["bisimilar"] == false);
  CHECK(j["seed"].is_null());
  CHECK(j["oracle"]["distinguisher"]["depth"] == 2);
  CHECK(j["oracle"]["agrees"] == true);
}

TEST_CASE("oracle cross-check on a bisimilar pair") {
  const auto r = run({"check", kP1, kP2, "--oracle", "--oracle-depth", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle (depth 4): equivalent, agrees") != std::string::npos);
}

TEST_CASE("traces") {
  const auto r = run({"check", kP1, kP2, "--trace", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["traces"]["left"].size() == 2);
  CHECK(j["traces"]["right"].empty());
  for (const auto& s : j["traces"]["left"]) {
    CHECK(s["axiom"] == "B1");
    CHECK(s["occurrence"].is_object());
  }
  const auto t = run({"seed", "!a.0 | !a.0", "--trace", "--json"});
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["seed"] == "!a.0");
  CHECK(tj["trace"][0]["axiom"] == "B2");
}

TEST_CASE("seed, normalize and lts") {
  CHECK(run({"seed", "!a.(b.0|a.b.0)"}).out == "!a.b.0\n");
  CHECK(run({"normalize", "a.(b.0|a.b.0)"}).out == "a.b.0 | a.b.0\n");
  CHECK(run({"lts", "!a.b.0", "--depth", "1"}).out == "a → !a.b.0 | b.0\n");
  CHECK(run({"lts", "!a.b.0"}).out == "a → !a.b.0 | b.0\n");
  const auto j = nlohmann::json::parse(run({"lts", "a.0|~a.0", "--sync", "--json"}).out);
  CHECK(j["states"][0]["transitions"].size() == 3);
  CHECK(j["mode"] == "sync");
}

TEST_CASE("stdin terms") {
  CHECK(run({"seed", "-"}, "!a.(b.0|a.b.0)\n").out == "!a.b.0\n");
  const auto r = run({"check", "-", "-"}, std::string(kP1) + "\n" + kP2 + "\n");
  CHECK(r.code == 0);
  CHECK(run({"seed", "-"}, "").code == 2);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({"check", "a.!b.0", "0"}).code == 2);
  CHECK(run({"check", "a.!b.0", "0"}).err.find("top level") != std::string::npos);
  CHECK(run({"check", "a.", "0"}).code == 2);
  CHECK(run({"check", "0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "0", "0", "--oracle-depth", "13"}).code == 2);
  CHECK(run({"fuzz", "--max-size", "9"}).code == 2);
  CHECK(run({"lts", "a.0", "--depth", "0"}).code == 2);
  CHECK(run({"seed", "~a.0"}).code == 2);
  CHECK(run({"seed", "~a.0", "--sync"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fuzz is deterministic") {
  const std::vector<std::string> args{"fuzz", "--max-size", "2", "--samples", "20", "--seed", "3", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["properties"].size() == 15);
  const auto text = run({"fuzz", "--max-size", "2", "--samples", "20"});
  CHECK(text.code == 0);
  CHECK(text.out.find("FAIL") == std::string::npos);
  CHECK(text.out.substr(text.out.size() - 7) == "passed\n");
}
