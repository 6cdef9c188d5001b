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

#include "ccs/corpus.hpp"
#include "ccs/eqd.hpp"
#include "ccs/lts.hpp"
#include "reference.hpp"

using namespace ccs;

namespace {
std::vector<std::string> moves(const char* s, Mode mode = Mode::base) {
  std::vector<std::string> out;
  for (const auto& t : transitions(parse(s, mode), mode)) {
    out.push_back(render(t.label) + " " + render(t.destination));
  }
  return out;
}
}  // namespace

TEST_CASE("replication spawns a copy") {
  CHECK(moves("!a.b.0") == std::vector<std::string>{"a !a.b.0 | b.0"});
}

TEST_CASE("nil has no transitions") { CHECK(moves("0").empty()); }

TEST_CASE("synchronisation of sibling co-actions") {
  const auto ms = moves("a.0 | ~a.0", Mode::sync);
  CHECK(ms.size() == 3);
  CHECK(std::find(ms.begin(), ms.end(), "tau 0") != ms.end());
  // Brute-force count of rule applications, nothing merged.
  const auto raw = testing::raw_finite_moves(parse_finite("a.0 | ~a.0", Mode::sync), Mode::sync);
  CHECK(raw.size() == 3);
}

TEST_CASE("no tau in base mode or between equal polarities") {
  CHECK(moves("a.0 | a.0").size() == 1);
  CHECK(moves("a.0 | ~a.0 | a.0", Mode::sync).size() == 3);
  std::vector<std::string> taus;
  for (const auto& m : moves("a.0 | ~a.0 | b.~b.0", Mode::sync)) {
    if (m.rfind("tau", 0) == 0) taus.push_back(m);
  }
  CHECK(taus == std::vector<std::string>{"tau b.~b.0"});
}

TEST_CASE("replicated components synchronise with spawned copies") {
  const auto ms = moves("!a.0 | ~a.b.0", Mode::sync);
  CHECK(std::find(ms.begin(), ms.end(), "tau !a.0 | b.0") != ms.end());
  const auto both = moves("!a.0 | !~a.0", Mode::sync);
  CHECK(std::find(both.begin(), both.end(), "tau !a.0 | !~a.0") != both.end());
}

TEST_CASE("a single replicated component does not synchronise with itself") {
  for (const auto& m : moves("!a.~a.0", Mode::sync)) CHECK(m.rfind("tau", 0) != 0);
}

TEST_CASE("reduct_k") {
  const Process p = parse("!a.(b.0 | c.0)");
  CHECK(reduct_k(p, p, 0));
  CHECK(reduct_k(parse("a.b.0"), parse("b.0"), 1));
  CHECK_FALSE(reduct_k(parse("a.b.0"), parse("b.0"), 2));
  const Process goal = parse("!a.(b.0 | c.0) | b.0");
  CHECK(reduct_k(p, goal, 2));
  CHECK_FALSE(reduct_k(p, goal, 1));
  // Independent confirmation: spawn, then fire c.
  bool found = false;
  for (const auto& t1 : transitions(p)) {
    for (const auto& t2 : transitions(t1.destination)) {
      if (render(t1.label) == "a" && render(t2.label) == "c" && t2.destination == goal) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("reachable sets") {
  auto reach = [](const char* s, std::size_t d) {
    std::set<std::string> out;
    for (const auto& c : reachable_within(parse(s), d)) out.insert(render(c.process()));
    return out;
  };
  CHECK(reach("0", 5) == std::set<std::string>{"0"});
  CHECK(reach("a.0", 1) == std::set<std::string>{"a.0", "0"});
  CHECK(reach("!a.0", 2) == std::set<std::string>{"!a.0"});
  // Closure by hand: the only move of !a.0 leads to !a.0 | 0.
  const auto t = transitions(parse("!a.0"));
  REQUIRE(t.size() == 1);
  CHECK(eq_d(t.front().destination, parse("!a.0 | 0")));
  CHECK_THROWS_AS(reachable_within(parse("a.0"), 13), DepthExceeded);
}

TEST_CASE("property: finite transitions match the brute-force rule enumeration") {
  RandomGenerator rng(31);
  for (Mode mode : {Mode::base, Mode::sync}) {
    const auto actions = actions_for(2, mode);
    for (int i = 0; i < 400; ++i) {
      const FiniteProcess f = canonicalize(rng.finite(rng.below(7), actions));
      std::set<std::pair<std::string, std::string>> expected;
      for (const auto& [l, d] : testing::raw_finite_moves(f, mode)) {
        expected.emplace(l, render(canonicalize(parse(d, mode)).process()));
      }
      std::set<std::pair<std::string, std::string>> actual;
      for (const auto& t : transitions(Process(f), mode)) {
        actual.emplace(render(t.label), render(t.destination));
      }
      CHECK(actual == expected);
    }
  }
}

TEST_CASE("property: replicated components persist and the system is image-finite") {
  RandomGenerator rng(32);
  for (Mode mode : {Mode::base, Mode::sync}) {
    const auto actions = actions_for(2, mode);
    for (int i = 0; i < 400; ++i) {
      const Process p = canonicalize(rng.process(rng.below(9), actions)).process();
      const auto ts = transitions(p, mode);
      // One firing per component plus at most one tau per pair.
      const std::size_t n = p.replicated().size() + p.finite().components().size();
      CHECK(ts.size() <= n + n * (n + 1) / 2);
      for (const auto& t : ts) {
        CHECK(t.destination.replicated() == p.replicated());
        CHECK(is_canonical(t.destination));
        if (mode == Mode::base) CHECK_FALSE(t.label.tau);
      }
    }
  }
}
