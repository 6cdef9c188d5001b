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

#include "ccs/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace ccs {

const char* to_string(Axiom a) { return a == Axiom::b1 ? "B1" : "B2"; }

namespace {

// Replicated components of the target, each paired with the single
// prefixed term an occurrence must equal to match it. A component whose
// own prefix is a distribution redex has no single-term canonical form and
// can never match an occurrence of a canonical process.
struct GuideKey {
  PrefixedTerm key;
  PrefixedTerm component;
};

std::vector<GuideKey> guide_keys(const Process& target) {
  std::vector<GuideKey> keys;
  for (const auto& r : target.replicated()) {
    FiniteProcess c = canonicalize(r);
    if (c.components().size() == 1) keys.push_back({c.components().front(), r});
  }
  return keys;
}

std::vector<RewriteStep> b1_steps(const Process& p, const std::vector<GuideKey>& keys) {
  std::vector<RewriteStep> out;
  if (keys.empty()) return out;
  for (auto& occ : occurrences(p)) {
    for (const auto& k : keys) {
      if (occ.term.size() != k.key.size() || !(occ.term == k.key)) continue;
      RewriteStep step;
      step.axiom = Axiom::b1;
      step.before = p;
      step.after = canonicalize(delete_at(p, occ.path)).process();
      step.occurrence = std::move(occ.path);
      step.justification = k.component;
      out.push_back(std::move(step));
      break;
    }
  }
  return out;
}

Process drop_replicated(const Process& p, std::size_t index) {
  std::vector<PrefixedTerm> reps;
  reps.reserve(p.replicated().size() - 1);
  for (std::size_t i = 0; i < p.replicated().size(); ++i) {
    if (i != index) reps.push_back(p.replicated()[i]);
  }
  return Process(std::move(reps), p.finite());
}

std::vector<RewriteStep> b2_steps(const Process& p) {
  std::vector<RewriteStep> out;
  const auto& reps = p.replicated();
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (!(reps[i] == reps[i - 1])) continue;
    // One step per run of equal components.
    if (i >= 2 && reps[i - 2] == reps[i]) continue;
    RewriteStep step;
    step.axiom = Axiom::b2;
    step.before = p;
    step.after = drop_replicated(p, i);
    step.replicated_index = i;
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace

std::vector<RewriteStep> step_b1(const Process& p, const Process& target) {
  return b1_steps(canonicalize(p).process(), guide_keys(canonicalize(target).process()));
}

std::vector<RewriteStep> step_b2(const Process& p) {
  return b2_steps(canonicalize(p).process());
}

std::optional<Trace> rewrites_to(const Process& p, const Process& target,
                                 SearchStats* stats) {
  const Process start = canonicalize(p).process();
  const Process goal = canonicalize(target).process();
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st.visited = 0;
  if (start == goal) return Trace{};

  const std::size_t goal_size = size(goal);
  if (size(start) < goal_size) return std::nullopt;
  const auto keys = guide_keys(goal);

  // Step that first reached each state; its `before` is the BFS parent.
  std::unordered_map<Process, RewriteStep, ProcessHash> reached_by;
  std::unordered_set<Process, ProcessHash> seen{start};
  std::deque<Process> queue{start};

  auto reconstruct = [&](RewriteStep last) {
    Trace trace{std::move(last)};
    while (!(trace.back().before == start)) trace.push_back(reached_by.at(trace.back().before));
    std::reverse(trace.begin(), trace.end());
    return trace;
  };

  while (!queue.empty()) {
    Process state = std::move(queue.front());
    queue.pop_front();
    ++st.visited;
    if (size(state) == goal_size) continue;
    auto steps = b1_steps(state, keys);
    auto dups = b2_steps(state);
    steps.insert(steps.end(), std::make_move_iterator(dups.begin()),
                 std::make_move_iterator(dups.end()));
    for (auto& step : steps) {
      if (size(step.after) < goal_size) continue;
      if (step.after == goal) return reconstruct(std::move(step));
      if (!seen.insert(step.after).second) continue;
      queue.push_back(step.after);
      reached_by.emplace(step.after, std::move(step));
    }
  }
  return std::nullopt;
}

std::vector<CanonicalProcess> deletion_descendants(const Process& p) {
  const Process start = canonicalize(p).process();
  std::unordered_set<Process, ProcessHash> seen{start};
  std::vector<Process> stack{start};
  while (!stack.empty()) {
    Process state = std::move(stack.back());
    stack.pop_back();
    auto visit = [&](Process next) {
      if (seen.insert(next).second) stack.push_back(std::move(next));
    };
    for (const auto& occ : occurrences(state)) {
      visit(canonicalize(delete_at(state, occ.path)).process());
    }
    for (auto& step : b2_steps(state)) visit(std::move(step.after));
  }
  std::vector<CanonicalProcess> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(assume_canonical(s));
  std::sort(out.begin(), out.end());
  return out;
}

SeedResult compute_seed(const Process& p, const SeedOptions& options) {
  std::vector<CanonicalProcess> candidates = deletion_descendants(p);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const CanonicalProcess& a, const CanonicalProcess& b) {
                     const std::size_t sa = size(a.process());
                     const std::size_t sb = size(b.process());
                     if (sa != sb) return sa < sb;
                     return options.order == CandidateOrder::ascending ? a < b : b < a;
                   });

  SeedResult result{canonicalize(p), {}, 0, 0, 0};
  std::optional<std::size_t> found_size;
  for (const auto& c : candidates) {
    const std::size_t cs = size(c.process());
    if (found_size && cs > *found_size) break;
    ++result.candidates;
    SearchStats stats;
    auto trace = rewrites_to(p, c.process(), &stats);
    result.max_visited = std::max(result.max_visited, stats.visited);
    if (!trace) continue;
    ++result.verified;
    if (!found_size) {
      found_size = cs;
      result.seed = c;
      result.trace = std::move(*trace);
      if (!options.check_uniqueness) break;
    } else if (!(c == result.seed)) {
      throw std::logic_error("two non-congruent minimal seeds for " + render(p) + ": " +
                             render(result.seed.process()) + " and " + render(c.process()));
    }
  }
  return result;
}

Conversion convert(const Process& p, const Process& q) {
  Conversion out{false, compute_seed(p), compute_seed(q), std::nullopt};
  out.convertible = out.left.seed == out.right.seed;
  if (out.convertible) out.witness = out.left.seed;
  return out;
}

bool convertible(const Process& p, const Process& q) { return convert(p, q).convertible; }

const SeedResult& SeedCache::seed(const Process& p) {
  const Process key = canonicalize(p).process();
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  SeedResult computed = compute_seed(key);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, std::move(computed)).first->second;
}

bool SeedCache::convertible(const Process& p, const Process& q) {
  return seed(p).seed == seed(q).seed;
}

std::size_t SeedCache::size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::vector<std::pair<Process, SeedResult>> SeedCache::entries() const {
  std::lock_guard lock(mutex_);
  return {cache_.begin(), cache_.end()};
}

}  // namespace ccs
