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

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/eqd.hpp"
#include "ccs/syntax.hpp"

namespace ccs {

/// Hard bound on exploration depth for reachability and games.
inline constexpr std::size_t kDefaultDepthCap = 12;

class DepthExceeded : public std::runtime_error {
 public:
  DepthExceeded(std::size_t requested, std::size_t cap)
      : std::runtime_error("depth " + std::to_string(requested) +
                           " exceeds the configured cap " + std::to_string(cap)) {}
};

/// A visible action or the internal move produced by a synchronisation.
struct Label {
  bool tau = false;
  Action action;

  static Label visible(Action a) { return {false, std::move(a)}; }
  static Label internal() { return {true, {}}; }

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

std::string render(const Label& l);

struct Transition {
  Process source;
  Label label;
  /// Always in canonical form.
  Process destination;
};

/// One-step successors of a canonical process, sorted by (label,
/// destination) and deduplicated.
struct Successor {
  Label label;
  Process destination;
};
std::vector<Successor> successors(const CanonicalProcess& p, Mode mode);

/// Every one-step transition of p. In sync mode this includes the tau
/// moves of co-action pairs of distinct top-level components.
std::vector<Transition> transitions(const Process& p, Mode mode = Mode::base);

/// True iff some sequence of exactly k base-mode transitions leads from p
/// to a process congruent to q.
bool reduct_k(const Process& p, const Process& q, std::size_t k);

/// All processes reachable in at most `depth` steps, in canonical form,
/// sorted.
std::vector<CanonicalProcess> reachable_within(const Process& p, std::size_t depth,
                                               Mode mode = Mode::base,
                                               std::size_t cap = kDefaultDepthCap);

}  // namespace ccs
