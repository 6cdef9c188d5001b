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
#include "ccs/path.hpp"

using namespace ccs;

TEST_CASE("occurrences of a nested term") {
  const Process p = parse("!a.(b.0 | c.d.0) | e.0");
  const auto occ = occurrences(p);
  std::vector<std::string> rendered;
  for (const auto& o : occ) rendered.push_back(render(o.path) + " " + render(o.term));
  // The replicated prefix itself is never addressed.
  CHECK(occ.size() == 4);
  CHECK(std::find(rendered.begin(), rendered.end(), "finite/0 e.0") != rendered.end());
  CHECK(std::find(rendered.begin(), rendered.end(), "replicated[0]/0 b.0") != rendered.end());
  CHECK(std::find(rendered.begin(), rendered.end(), "replicated[0]/1 c.d.0") != rendered.end());
  CHECK(std::find(rendered.begin(), rendered.end(), "replicated[0]/1/0 d.0") != rendered.end());
  for (const auto& o : occ) CHECK(term_at(p, o.path) == o.term);
}

TEST_CASE("deleting an occurrence") {
  const Process p = parse("!a.(b.0 | c.d.0) | e.0");
  for (const auto& o : occurrences(p)) {
    const Process q = delete_at(p, o.path);
    CHECK(size(q) == size(p) - o.term.size());
    CHECK(q.replicated().size() == p.replicated().size());
  }
}

TEST_CASE("holes and plugging") {
  const Process p = parse("!a.b.0 | c.0");
  const auto hs = holes(p);
  // Root multiset, the body of a.b.0, the body of b.0, the body of c.0.
  CHECK(hs.size() == 4);
  const FiniteProcess x = parse_finite("d.0");
  std::set<std::string> results;
  for (const auto& h : hs) results.insert(render(plug(p, h, x)));
  CHECK(results.count("!a.b.0 | c.0 | d.0"));
  CHECK(results.count("!a.(b.0 | d.0) | c.0"));
  CHECK(results.count("!a.b.d.0 | c.0"));
  CHECK(results.count("!a.b.0 | c.d.0"));
  for (const auto& h : hs) CHECK(plug(p, h, {}) == p);
}

TEST_CASE("property: plug then delete restores the term") {
  RandomGenerator rng(21);
  const auto actions = actions_for(2, Mode::base);
  const FiniteProcess marker = parse_finite("z.0");
  for (int i = 0; i < 300; ++i) {
    const Process p = rng.process(rng.below(7), actions);
    const Hole h = rng.hole(p);
    const Process q = plug(p, h, marker);
    CHECK(size(q) == size(p) + 1);
    bool found = false;
    for (const auto& o : occurrences(q)) {
      if (render(o.term) == "z.0" && delete_at(q, o.path) == p) found = true;
    }
    CHECK(found);
  }
}
