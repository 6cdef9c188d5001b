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

#include <deque>

#include "ccs/corpus.hpp"
#include "ccs/eqd.hpp"
#include "ccs/rewrite.hpp"
#include "reference.hpp"

using namespace ccs;

namespace {
const char* kP1 = "!a.(b.0|a.c.0) | !a.(c.0|a.b.0)";
const char* kP2 = "!a.b.0 | !a.c.0";

std::set<std::string> afters(const std::vector<RewriteStep>& steps) {
  std::set<std::string> out;
  for (const auto& s : steps) out.insert(render(s.after));
  return out;
}
}  // namespace

TEST_CASE("B1 deletes guide occurrences") {
  const auto steps = step_b1(parse(kP1), parse(kP2));
  CHECK(afters(steps).count("!a.c.0 | !a.(b.0 | a.c.0)"));
  for (const auto& s : steps) {
    CHECK(s.axiom == Axiom::b1);
    REQUIRE(s.occurrence);
    REQUIRE(s.justification);
    CHECK(size(s.after) < size(s.before));
  }
}

TEST_CASE("B1 on the self-absorbing body") {
  const auto steps = step_b1(parse("!a.(b.0|a.b.0)"), parse("!a.b.0"));
  REQUIRE(steps.size() == 1);
  CHECK(render(steps.front().after) == "!a.b.0");
  CHECK(step_b1(parse("a.0"), parse("!b.0")).empty());
  CHECK(step_b1(parse("a.0"), parse("0")).empty());
}

TEST_CASE("B2 drops duplicates") {
  const auto steps = step_b2(parse("!a.0 | !a.0"));
  REQUIRE(steps.size() == 1);
  CHECK(render(steps.front().after) == "!a.0");
  CHECK(steps.front().replicated_index);
  CHECK(step_b2(parse("!a.0 | !b.0")).empty());
  // The second body is canonical and not congruent to the first.
  CHECK(step_b2(parse("!a.b.0 | !a.(b.0|a.b.0)")).empty());
  CHECK(step_b2(canonicalize(parse("!a.b.0 | !a.(b.0|a.b.0)"))).empty());
}

TEST_CASE("guided search") {
  auto t = rewrites_to(parse(kP1), parse(kP2));
  REQUIRE(t);
  CHECK(t->size() == 2);
  CHECK(render(t->back().after) == "!a.b.0 | !a.c.0");
  for (const auto& s : *t) CHECK(s.axiom == Axiom::b1);
  auto self = rewrites_to(parse(kP1), parse(kP1));
  REQUIRE(self);
  CHECK(self->empty());
  CHECK_FALSE(rewrites_to(parse("!a.b.0"), parse("!a.c.0")));
}

TEST_CASE("no path from !a.b.0 to !a.c.0 by exhaustive step search") {
  const Process target = parse("!a.c.0");
  std::set<Process> seen;
  std::deque<Process> queue{canonicalize(parse("!a.b.0")).process()};
  while (!queue.empty()) {
    Process p = queue.front();
    queue.pop_front();
    if (!seen.insert(p).second) continue;
    CHECK_FALSE(eq_d(p, target));
    for (const auto& s : step_b1(p, target)) queue.push_back(s.after);
    for (const auto& s : step_b2(p)) queue.push_back(s.after);
  }
  CHECK(seen.size() == 1);
}

TEST_CASE("seeds") {
  const SeedResult r = compute_seed(parse(kP1));
  CHECK(render(r.seed.process()) == "!a.b.0 | !a.c.0");
  CHECK(r.trace.size() == 2);
  CHECK(render(compute_seed(parse("!a.(b.0|a.b.0)")).seed.process()) == "!a.b.0");
  CHECK(render(compute_seed(parse("a.0")).seed.process()) == "a.0");
  CHECK(render(compute_seed(parse("0")).seed.process()) == "0");
  CHECK(render(compute_seed(parse("!a.0 | a.0 | a.a.0")).seed.process()) == "!a.0");
  CHECK(render(compute_seed(parse("a.(b.0|a.b.0)")).seed.process()) == "a.b.0 | a.b.0");
}

TEST_CASE("convertibility") {
  CHECK(convertible(parse(kP1), parse(kP2)));
  CHECK(convertible(parse(kP1), parse(kP1)));
  CHECK_FALSE(convertible(parse("!a.b.0"), parse("!a.c.0")));
  // Depth-2 evidence from the naive reference game.
  CHECK_FALSE(testing::naive_equivalent(parse("!a.b.0"), parse("!a.c.0"), 2));
  CHECK(testing::naive_equivalent(parse("!a.b.0"), parse("!a.c.0"), 1));
  const Conversion c = convert(parse(kP1), parse(kP2));
  REQUIRE(c.witness);
  CHECK(render(c.witness->process()) == "!a.b.0 | !a.c.0");
}

TEST_CASE("seed cache") {
  SeedCache cache;
  CHECK(cache.convertible(parse(kP1), parse(kP2)));
  CHECK(cache.size() == 2);
  CHECK(cache.seed(parse(kP1)).seed == compute_seed(parse(kP1)).seed);
  CHECK(cache.size() == 2);
  CHECK(cache.entries().size() == 2);
}

TEST_CASE("property: every step shrinks and traces chain to the seed") {
  RandomGenerator rng(41);
  const auto actions = actions_for(2, Mode::base);
  for (int i = 0; i < 300; ++i) {
    const Process p = rng.process(1 + rng.below(7), actions);
    const SeedResult r = compute_seed(p);
    CHECK(size(r.seed.process()) <= size(p));
    Process at = canonicalize(p).process();
    for (const auto& s : r.trace) {
      CHECK(s.before == at);
      CHECK(size(s.after) < size(s.before));
      at = s.after;
    }
    CHECK(at == r.seed.process());
    // Seeds are their own seeds.
    CHECK(compute_seed(r.seed.process()).seed == r.seed);
  }
}

TEST_CASE("property: seeds agree with the naive game on small processes") {
  RandomGenerator rng(42);
  const auto actions = actions_for(2, Mode::base);
  for (int i = 0; i < 200; ++i) {
    const Process p = rng.process(1 + rng.below(5), actions);
    const Process s = compute_seed(p).seed.process();
    CHECK(testing::naive_equivalent(p, s, 4));
  }
}
