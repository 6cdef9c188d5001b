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
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccs/eqd.hpp"
#include "ccs/lts.hpp"
#include "ccs/syntax.hpp"

// Independent validators for the rewriting characterisation.
namespace ccs {

// -- exact bisimilarity on finite processes ------------------------------------

/// Decides strong bisimilarity of finite processes by computing, bottom-up,
/// an id for the bisimilarity class of every derivative. States are kept
/// modulo the monoid laws only; the distribution law is never used, so this
/// stays independent of eq_d.
class FiniteBisimSolver {
 public:
  explicit FiniteBisimSolver(Mode mode = Mode::base) : mode_(mode) {}

  /// Equal ids iff bisimilar.
  int class_id(const FiniteProcess& f);
  bool bisimilar(const FiniteProcess& f, const FiniteProcess& g) {
    return class_id(f) == class_id(g);
  }

 private:
  Mode mode_;
  std::unordered_map<FiniteProcess, int, ProcessHash> memo_;
  std::map<std::vector<std::pair<Label, int>>, int> intern_;
};

bool finite_bisim(const FiniteProcess& f, const FiniteProcess& g, Mode mode = Mode::base);

// -- bounded bisimulation game -----------------------------------------------

struct GameConfig {
  std::size_t depth = 6;
  Mode mode = Mode::base;
  std::size_t cap = kDefaultDepthCap;
};

enum class Side { left, right };

struct GameMove {
  Side side = Side::left;
  Label label;
  /// State reached by the attacker.
  Process attacker;
  /// Response chosen by the defender; absent on the final move, where the
  /// defender has no transition with this label.
  std::optional<Process> defender;
};

/// A line of play won by the attacker. In each round every defender answer
/// loses; `moves` follows one of them.
struct Distinguisher {
  std::vector<GameMove> moves;
  std::size_t depth() const { return moves.size(); }
};

struct GameResult {
  /// No difference found within the bound.
  bool equivalent = true;
  std::optional<Distinguisher> distinguisher;
};

/// k-round game solved through depth-indexed signatures: two processes are
/// k-bisimilar iff their depth-k signatures coincide. States are memoised
/// by canonical form, which makes the game one up to the congruence.
class BoundedGame {
 public:
  explicit BoundedGame(Mode mode = Mode::base, std::size_t cap = kDefaultDepthCap)
      : mode_(mode), cap_(cap) {}

  int signature(const Process& p, std::size_t depth);
  GameResult play(const Process& p, const Process& q, std::size_t depth);
  std::size_t states() const { return memo_.size(); }

 private:
  struct Entry {
    std::vector<Successor> succ;
    std::vector<int> sig;
  };
  Entry& entry(const Process& canonical);
  int sig(const Process& canonical, std::size_t depth);
  void explain(const Process& left, const Process& right, std::size_t depth,
               Distinguisher& out);

  Mode mode_;
  std::size_t cap_;
  std::unordered_map<Process, Entry, ProcessHash> memo_;
  std::map<Label, int> labels_;
  std::map<std::vector<std::pair<int, int>>, int> intern_;
};

GameResult bounded_bisim(const Process& p, const Process& q, const GameConfig& cfg = {});

/// Checks that a distinguisher is a legal line of play from (p, q) ending
/// with a defender unable to answer.
bool replay(const Distinguisher& d, const Process& p, const Process& q, Mode mode);

// -- predicates on replicated-only processes -----------------------------------

/// `s dis f`: no prefixed occurrence of f is congruent to a replicated
/// component a.S_i of s. Requires s to have no finite part.
bool dis_check(const Process& s, const FiniteProcess& f);

/// `s purg r`: s evolves in at least one step to s | r, i.e. the components
/// of r split into groups, each a derivative of some replicated body S_i.
/// Requires s to have no finite part.
bool purg_check(const Process& s, const FiniteProcess& r);

/// Every derivative (zero or more base-mode steps) of a finite process, in
/// canonical form.
std::vector<FiniteProcess> derivatives(const FiniteProcess& f);

}  // namespace ccs
