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

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccs/eqd.hpp"
#include "ccs/path.hpp"
#include "ccs/syntax.hpp"

/**
 * Target-guided rewriting towards seeds, the minimal-size representatives
 * of strong bisimilarity classes. A target T induces two deletion axioms,
 * applied modulo the distribution-law congruence:
 *
 *   (B1)  C[a.F]          ~>_T  C[0]         if T = !a.F | F'
 *   (B2)  !a.F | !a.F | P  ~>_T  !a.F | P
 *
 * Both strictly decrease size, so every search terminates. Two processes
 * are bisimilar iff they rewrite, each guided by it, to a common target;
 * the seed of either one is such a target.
 */
namespace ccs {

enum class Axiom { b1, b2 };

const char* to_string(Axiom a);

struct RewriteStep {
  Axiom axiom = Axiom::b1;
  /// B1: the deleted occurrence, addressed in `before`.
  std::optional<Path> occurrence;
  /// B2: index in `before.replicated()` of the dropped duplicate.
  std::optional<std::size_t> replicated_index;
  Process before;
  Process after;
  /// B1: the replicated component `a.F` of the target that licenses the
  /// deletion.
  std::optional<PrefixedTerm> justification;
};

using Trace = std::vector<RewriteStep>;

/// B1 steps of p guided by `target`, one per matching occurrence.
std::vector<RewriteStep> step_b1(const Process& p, const Process& target);

/// B2 steps of p, one per distinct duplicated replicated component.
std::vector<RewriteStep> step_b2(const Process& p);

struct SearchStats {
  /// Distinct states (modulo the congruence) expanded by the search.
  std::size_t visited = 0;
};

/// A shortest sequence of target-guided steps from p to a process
/// congruent to `target`, if one exists.
std::optional<Trace> rewrites_to(const Process& p, const Process& target,
                                 SearchStats* stats = nullptr);

/// Order in which candidate seeds of equal size are tried.
enum class CandidateOrder { ascending, descending };

struct SeedOptions {
  CandidateOrder order = CandidateOrder::ascending;
  /// Verify every candidate of the minimal size and throw std::logic_error
  /// if two non-congruent ones succeed. When false the first verified
  /// candidate is returned.
  bool check_uniqueness = true;
};

struct SeedResult {
  CanonicalProcess seed;
  /// Steps from the input to `seed`, each guided by `seed`.
  Trace trace;
  /// Candidates examined, verified ones at the minimal size, and the largest
  /// state count of a single guided search.
  std::size_t candidates = 0;
  std::size_t verified = 0;
  std::size_t max_visited = 0;
};

/// Deletion descendants of p: processes reachable by repeatedly deleting
/// any addressable occurrence or one of two equal replicated components,
/// canonical and deduplicated, p included.
std::vector<CanonicalProcess> deletion_descendants(const Process& p);

SeedResult compute_seed(const Process& p, const SeedOptions& options = {});

struct Conversion {
  bool convertible = false;
  SeedResult left;
  SeedResult right;
  /// The common seed when convertible.
  std::optional<CanonicalProcess> witness;
};

Conversion convert(const Process& p, const Process& q);
bool convertible(const Process& p, const Process& q);

/// Thread-safe memo of seeds keyed by canonical form.
class SeedCache {
 public:
  const SeedResult& seed(const Process& p);
  bool convertible(const Process& p, const Process& q);
  std::size_t size() const;
  /// Copy of every cached (input, seed) entry.
  std::vector<std::pair<Process, SeedResult>> entries() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<Process, SeedResult, ProcessHash> cache_;
};

}  // namespace ccs
