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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccs/path.hpp"
#include "ccs/syntax.hpp"

// Process corpora for property suites: exhaustive enumeration by size and a
// seeded random generator whose output does not depend on the standard
// library's distribution implementations, so counterexamples replay.
namespace ccs {

/// The first n actions: a, b, c, ... in base mode; a, ~a, b, ~b, ... in
/// sync mode.
std::vector<Action> actions_for(std::size_t n, Mode mode);

/// Every finite process of size at most `max_size`, up to the monoid laws.
std::vector<FiniteProcess> all_finite(std::size_t max_size, const std::vector<Action>& actions);

/// Every process of size at most `max_size`, replication included.
std::vector<Process> all_processes(std::size_t max_size, const std::vector<Action>& actions);

class RandomGenerator {
 public:
  explicit RandomGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return below(2) == 1; }

  PrefixedTerm term(std::size_t size, const std::vector<Action>& actions);
  FiniteProcess finite(std::size_t size, const std::vector<Action>& actions);
  /// A process of exactly `size` prefixes, with a random share of them in
  /// replicated components.
  Process process(std::size_t size, const std::vector<Action>& actions);

  /// Random hole of p.
  Hole hole(const Process& p);
  /// Random finite hole of f (under the finite part only).
  Hole finite_hole(const FiniteProcess& f);

  /// Maps each of `from` to a random element of `to`; usually not injective.
  Substitution substitution(const std::vector<std::string>& from,
                            const std::vector<std::string>& to);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccs
