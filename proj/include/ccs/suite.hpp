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
#include <string>
#include <vector>

#include "ccs/rewrite.hpp"
#include "ccs/syntax.hpp"

// Property suites cross-checking the rewriting characterisation against the
// oracles. Each property reports how many instances it examined, how many
// of them satisfied its hypothesis (so vacuous passes are visible), and
// every counterexample found as replayable terms.
namespace ccs {

struct SuiteConfig {
  std::uint64_t seed = 1;
  Mode mode = Mode::base;
  /// Exhaustive corpus bound and alphabet size.
  std::size_t max_size = 4;
  std::size_t alphabet = 2;
  /// Random processes drawn above the exhaustive bound, up to
  /// `random_max_size` prefixes.
  std::size_t random_count = 200;
  std::size_t random_max_size = 8;
  /// Depth of the bounded bisimulation game.
  std::size_t depth = 6;
  /// Random instances for the law and substitution properties.
  std::size_t law_instances = 200;
  std::size_t substitution_pairs = 200;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct Counterexample {
  std::string description;
  std::vector<std::string> terms;
};

struct PropertyReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t hypothesis_hits = 0;
  /// Number of violations; at most kMaxReported are kept in full.
  std::size_t violations = 0;
  std::vector<Counterexample> counterexamples;
  /// Hit counts of auxiliary cases, e.g. inconclusive game verdicts.
  std::vector<std::pair<std::string, std::size_t>> notes;

  static constexpr std::size_t kMaxReported = 20;

  bool passed() const { return violations == 0; }
  void fail(std::string description, std::vector<std::string> terms);
  void note(const std::string& key, std::size_t count = 1);
  void merge(const PropertyReport& other);
};

struct SuiteReport {
  std::vector<PropertyReport> properties;
  bool passed() const;
  const PropertyReport* find(const std::string& name) const;
};

/// Corpus used by the suites: every process of size <= max_size over the
/// first `alphabet` actions, then `random_count` random processes of sizes
/// in (max_size, random_max_size].
std::vector<Process> standard_corpus(const SuiteConfig& cfg);

// Individual properties, each over an explicit corpus where one applies.

/// Convertibility never contradicts the bounded game. Corpus members of
/// size <= max_size are compared pairwise; larger ones against their seed
/// and their corpus neighbour.
PropertyReport check_characterisation(const std::vector<Process>& corpus, SeedCache& cache,
                                      const SuiteConfig& cfg);

/// Distribution-law congruence agrees with finite bisimilarity on every
/// pair of finite processes of size <= max_size.
PropertyReport check_finite_congruence(const SuiteConfig& cfg);

/// Two candidate orders yield congruent seeds.
PropertyReport check_seed_uniqueness(const std::vector<Process>& corpus, const SuiteConfig& cfg);

/// Each process rewrites to its seed under guidance by that seed, visiting
/// at most 2^size states.
PropertyReport check_seed_reachability(const std::vector<Process>& corpus, SeedCache& cache,
                                       const SuiteConfig& cfg);

/// A seed S | F always has S dis F.
PropertyReport check_seed_disjointness(const std::vector<Process>& corpus, SeedCache& cache,
                                       const SuiteConfig& cfg);

/// !a.F | C[a.F] ~ !a.F | C[0] on random instances.
PropertyReport check_absorption_law(const SuiteConfig& cfg, SeedCache& cache);

/// !a.D[a.D[0]] ~ !a.D[0] on random instances.
PropertyReport check_self_absorption_law(const SuiteConfig& cfg, SeedCache& cache);

/// Convertible pairs stay convertible under random renamings.
PropertyReport check_substitution_closure(const std::vector<Process>& corpus, SeedCache& cache,
                                          const SuiteConfig& cfg);

/// C[0] ~ !a.F | P implies C[0] ~ C[a.F], checked with the bounded game.
PropertyReport check_hole_filling(const std::vector<Process>& corpus, SeedCache& cache,
                                  const SuiteConfig& cfg);

/// !F ~ a.F' | Q implies !F ~ !F | a.F'.
PropertyReport check_replicated_absorption(const std::vector<Process>& corpus,
                                           SeedCache& cache, const SuiteConfig& cfg);

/// S ~ S | R with S purg R forces R = 0.
PropertyReport check_residue_vanishes(const std::vector<Process>& corpus, SeedCache& cache,
                                      const SuiteConfig& cfg);

/// !F1 | F1' ~ !F2 | F2' implies !F1 ~ !F2.
PropertyReport check_replicated_cancellation(const std::vector<Process>& corpus,
                                             SeedCache& cache, const SuiteConfig& cfg);

/// S | F1 ~ S | F2 with S dis F1 and S dis F2 implies F1 ~ F2.
PropertyReport check_finite_cancellation(const std::vector<Process>& corpus, SeedCache& cache,
                                         const SuiteConfig& cfg);

/// dis and purg are preserved by one-step derivatives of their argument.
PropertyReport check_predicate_closure(const std::vector<Process>& corpus,
                                       const SuiteConfig& cfg);

/// Every step of every trace in the cache decreases size, re-derives from
/// its axiom, and every guided search stayed within 2^size states.
PropertyReport check_termination(const SeedCache& cache);

/// Runs every property above on the standard corpus.
SuiteReport lemma_suite(const SuiteConfig& cfg);

}  // namespace ccs
