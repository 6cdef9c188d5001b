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
#include "ccs/oracle.hpp"

using namespace ccs;

namespace {
std::string canon(const char* s, Mode mode = Mode::base) {
  return render(canonicalize(parse(s, mode)).process());
}
}  // namespace

TEST_CASE("distribution law instance") {
  CHECK(canon("a.(b.0 | a.b.0)") == "a.b.0 | a.b.0");
  CHECK(canon("a.(b.0 | a.b.0 | a.b.0)") == "a.b.0 | a.b.0 | a.b.0");
  CHECK(canon("a.(a.0)") == "a.0 | a.0");
  CHECK(canon("a.b.0") == "a.b.0");
  CHECK(canon("0") == "0");
}

TEST_CASE("the law is never applied directly under a bang") {
  // The body is F | 2 copies of a.F with F = b.0, but the enclosing prefix
  // is the replicated one.
  const Process p = parse("!a.(b.0 | a.b.0 | a.b.0)");
  CHECK(canonicalize(p).process() == p);
  CHECK(is_canonical(p));
  // Independent redex scan over the components of the body.
  for (const auto& c : p.replicated().front().body().components()) CHECK_FALSE(root_redex(c));
  CHECK(root_redex(PrefixedTerm(plain("a"), p.replicated().front().body())));
}

TEST_CASE("the law applies inside replicated bodies") {
  CHECK(canon("!c.a.(b.0 | a.b.0)") == "!c.(a.b.0 | a.b.0)");
}

TEST_CASE("innermost redexes first") {
  // a.(a.(b.0|a.b.0) | b.0) -> inner gives a.(b.0 | a.b.0 | a.b.0), which
  // is again a redex with two copies.
  CHECK(canon("a.(a.(b.0 | a.b.0) | b.0)") == "a.b.0 | a.b.0 | a.b.0");
}

TEST_CASE("eqD examples") {
  CHECK(eq_d(parse("a.0 | 0"), parse("a.0")));
  CHECK(eq_d(parse("a.(b.0|a.b.0)"), parse("a.b.0|a.b.0")));
  CHECK_FALSE(eq_d(parse("a.b.0"), parse("b.a.0")));
  CHECK_FALSE(finite_bisim(parse_finite("a.b.0"), parse_finite("b.a.0")));
}

TEST_CASE("root redex detection") {
  const PrefixedTerm t = parse_finite("a.(b.0 | a.b.0)").components().front();
  auto r = root_redex(t);
  REQUIRE(r);
  CHECK(render(r->lifted) == "a.b.0");
  CHECK(r->copies == 1);
  CHECK_FALSE(root_redex(parse_finite("a.(b.0 | b.0)").components().front()));
  CHECK_FALSE(root_redex(parse_finite("a.(b.0 | a.c.0)").components().front()));
}

TEST_CASE("canonical wrapper") {
  const CanonicalProcess c = canonicalize(parse("a.(b.0 | a.b.0) | !c.0"));
  const Process& p = c;
  CHECK(render(p) == "!c.0 | a.b.0 | a.b.0");
  CHECK(canonicalize(p) == c);
}

TEST_CASE("property: canonicalisation is idempotent and size preserving") {
  RandomGenerator rng(11);
  for (Mode mode : {Mode::base, Mode::sync}) {
    const auto actions = actions_for(2, mode);
    for (int i = 0; i < 1000; ++i) {
      const Process p = rng.process(rng.below(10), actions);
      const Process c = canonicalize(p).process();
      CHECK(canonicalize(c).process() == c);
      CHECK(is_canonical(c));
      CHECK(size(c) == size(p));
    }
  }
}

TEST_CASE("property: canonicalisation commutes with parallel composition") {
  RandomGenerator rng(12);
  const auto actions = actions_for(2, Mode::base);
  for (int i = 0; i < 500; ++i) {
    const Process p = rng.process(rng.below(7), actions);
    const Process q = rng.process(rng.below(7), actions);
    CHECK(canonicalize(p | q).process() ==
          (canonicalize(p).process() | canonicalize(q).process()));
  }
}

TEST_CASE("property: eqD agrees with finite bisimilarity on small terms") {
  const auto fs = all_finite(4, actions_for(2, Mode::base));
  FiniteBisimSolver solver;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      CHECK(eq_d(fs[i], fs[j]) == solver.bisimilar(fs[i], fs[j]));
    }
  }
}
