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

using namespace ccs;

namespace {

// Counts by size from the generating functions: prefixed terms of size m
// are k * F(m - 1); finite processes are multisets of them (Euler
// transform); processes pair a multiset of replicated terms with a finite
// part.
struct Counts {
  std::vector<double> finite;
  std::vector<double> process;
};

Counts count_by_size(std::size_t n, std::size_t k) {
  std::vector<double> f(n + 1, 0.0), t(n + 1, 0.0);
  f[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    t[m] = static_cast<double>(k) * f[m - 1];
    // Euler transform: m f(m) = sum_{j=1..m} c(j) f(m - j), with
    // c(j) = sum_{d | j} d t(d).
    double acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      double c = 0;
      for (std::size_t d = 1; d <= j; ++d) {
        if (j % d == 0) c += static_cast<double>(d) * t[d];
      }
      acc += c * f[m - j];
    }
    f[m] = acc / static_cast<double>(m);
  }
  std::vector<double> p(n + 1, 0.0);
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t i = 0; i <= m; ++i) p[m] += f[i] * f[m - i];
  }
  return {f, p};
}

double cumulative(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("action sets") {
  const auto base = actions_for(3, Mode::base);
  REQUIRE(base.size() == 3);
  CHECK(render(base[0]) == "a");
  CHECK(render(base[2]) == "c");
  const auto sync = actions_for(2, Mode::sync);
  REQUIRE(sync.size() == 2);
  CHECK(are_coactions(sync[0], sync[1]));
}

TEST_CASE("enumeration sizes match the generating functions") {
  for (std::size_t k : {1u, 2u, 3u}) {
    const std::size_t n = k == 3 ? 4 : 5;
    const Counts c = count_by_size(n, k);
    const auto actions = actions_for(k, Mode::base);
    CHECK(static_cast<double>(all_finite(n, actions).size()) == cumulative(c.finite));
    CHECK(static_cast<double>(all_processes(n, actions).size()) == cumulative(c.process));
  }
}

TEST_CASE("enumeration has no duplicates and respects the bound") {
  const auto ps = all_processes(5, actions_for(2, Mode::base));
  std::set<Process> unique(ps.begin(), ps.end());
  CHECK(unique.size() == ps.size());
  for (const auto& p : ps) CHECK(size(p) <= 5);
  CHECK(unique.count(parse("!a.b.0 | !a.c.0")) == 0);
  CHECK(unique.count(parse("!a.b.0 | !b.a.0")) == 1);
}

TEST_CASE("random generation is reproducible and sized") {
  const auto actions = actions_for(2, Mode::base);
  RandomGenerator a(5), b(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = a.below(9);
    CHECK(b.below(9) == n);
    const Process p = a.process(n, actions);
    CHECK(b.process(n, actions) == p);
    CHECK(size(p) == n);
    CHECK(a.finite(n, actions).size() == n);
    b.finite(n, actions);
  }
}

TEST_CASE("random holes are positions of the process") {
  RandomGenerator rng(6);
  const auto actions = actions_for(2, Mode::base);
  for (int i = 0; i < 200; ++i) {
    const Process p = rng.process(rng.below(6), actions);
    const Hole h = rng.hole(p);
    const auto hs = holes(p);
    CHECK(std::find(hs.begin(), hs.end(), h) != hs.end());
    const FiniteProcess f = rng.finite(rng.below(5), actions);
    const Hole fh = rng.finite_hole(f);
    CHECK(fh.root == Root::finite);
  }
}

TEST_CASE("random substitutions map into the target names") {
  RandomGenerator rng(7);
  const std::vector<std::string> from{"a", "b", "c"};
  const std::vector<std::string> to{"x", "y"};
  bool saw_collision = false;
  for (int i = 0; i < 100; ++i) {
    const Substitution s = rng.substitution(from, to);
    CHECK(s.size() == 3);
    std::set<std::string> image;
    for (const auto& [k, v] : s) {
      CHECK((v == "x" || v == "y"));
      image.insert(v);
    }
    if (image.size() < 3) saw_collision = true;
  }
  CHECK(saw_collision);
}
