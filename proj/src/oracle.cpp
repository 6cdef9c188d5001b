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

#include "ccs/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ccs/path.hpp"

namespace ccs {

// -- finite bisimilarity ---------------------------------------------------------

namespace {

// Fig. 1 rules (plus synchronisation) on a finite multiset, without any
// normalisation beyond sorting.
std::vector<std::pair<Label, FiniteProcess>> raw_steps(const FiniteProcess& f, Mode mode) {
  std::vector<std::pair<Label, FiniteProcess>> out;
  const auto& cs = f.components();
  auto drop = [&](std::size_t i, std::size_t j) {
    std::vector<PrefixedTerm> rest;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k != i && k != j) rest.push_back(cs[k]);
    }
    return rest;
  };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto rest = drop(i, i);
    rest.insert(rest.end(), cs[i].body().components().begin(),
                cs[i].body().components().end());
    out.emplace_back(Label::visible(cs[i].head()), FiniteProcess(std::move(rest)));
  }
  if (mode == Mode::sync) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        if (!are_coactions(cs[i].head(), cs[j].head())) continue;
        auto rest = drop(i, j);
        rest.insert(rest.end(), cs[i].body().components().begin(),
                    cs[i].body().components().end());
        rest.insert(rest.end(), cs[j].body().components().begin(),
                    cs[j].body().components().end());
        out.emplace_back(Label::internal(), FiniteProcess(std::move(rest)));
      }
    }
  }
  return out;
}

}  // namespace

int FiniteBisimSolver::class_id(const FiniteProcess& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  // Finite processes are well founded: the class of f is determined by the
  // set of (label, class of derivative) pairs.
  std::vector<std::pair<Label, int>> moves;
  for (auto& [label, next] : raw_steps(f, mode_)) moves.emplace_back(label, class_id(next));
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  const int id = intern_.try_emplace(std::move(moves), static_cast<int>(intern_.size()))
                     .first->second;
  memo_.emplace(f, id);
  return id;
}

bool finite_bisim(const FiniteProcess& f, const FiniteProcess& g, Mode mode) {
  FiniteBisimSolver solver(mode);
  return solver.bisimilar(f, g);
}

// -- bounded game ------------------------------------------------------------------

BoundedGame::Entry& BoundedGame::entry(const Process& canonical) {
  auto [it, inserted] = memo_.try_emplace(canonical);
  if (inserted) it->second.succ = successors(assume_canonical(canonical), mode_);
  return it->second;
}

int BoundedGame::sig(const Process& canonical, std::size_t depth) {
  if (depth == 0) return 0;
  Entry& e = entry(canonical);
  if (e.sig.size() > depth && e.sig[depth] >= 0) return e.sig[depth];
  std::vector<std::pair<int, int>> moves;
  moves.reserve(e.succ.size());
  for (const auto& s : e.succ) {
    const int label = labels_.try_emplace(s.label, static_cast<int>(labels_.size())).first->second;
    moves.emplace_back(label, sig(s.destination, depth - 1));
  }
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  // Ids are shared across depths; only same-depth ids are ever compared.
  const int id = intern_.try_emplace(std::move(moves), static_cast<int>(intern_.size()) + 1)
                     .first->second;
  if (e.sig.size() <= depth) e.sig.resize(depth + 1, -1);
  e.sig[depth] = id;
  return id;
}

int BoundedGame::signature(const Process& p, std::size_t depth) {
  if (depth > cap_) throw DepthExceeded(depth, cap_);
  return sig(canonicalize(p).process(), depth);
}

void BoundedGame::explain(const Process& left, const Process& right, std::size_t depth,
                          Distinguisher& out) {
  for (Side side : {Side::left, Side::right}) {
    const Process& attacker = side == Side::left ? left : right;
    const Process& defender = side == Side::left ? right : left;
    // Copies: entry() may insert into memo_ while we iterate.
    const std::vector<Successor> attacks = entry(attacker).succ;
    const std::vector<Successor> answers = entry(defender).succ;
    for (const auto& a : attacks) {
      const int target = sig(a.destination, depth - 1);
      const Successor* first = nullptr;
      bool answered = false;
      for (const auto& d : answers) {
        if (!(d.label == a.label)) continue;
        if (!first) first = &d;
        if (sig(d.destination, depth - 1) == target) {
          answered = true;
          break;
        }
      }
      if (answered) continue;
      if (!first) {
        out.moves.push_back({side, a.label, a.destination, std::nullopt});
        return;
      }
      out.moves.push_back({side, a.label, a.destination, first->destination});
      if (side == Side::left) {
        explain(a.destination, first->destination, depth - 1, out);
      } else {
        explain(first->destination, a.destination, depth - 1, out);
      }
      return;
    }
  }
  throw std::logic_error("explain called on an undistinguished pair");
}

GameResult BoundedGame::play(const Process& p, const Process& q, std::size_t depth) {
  if (depth > cap_) throw DepthExceeded(depth, cap_);
  const Process left = canonicalize(p).process();
  const Process right = canonicalize(q).process();
  GameResult result;
  if (left == right) return result;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (sig(left, k) == sig(right, k)) continue;
    result.equivalent = false;
    Distinguisher d;
    explain(left, right, k, d);
    result.distinguisher = std::move(d);
    return result;
  }
  return result;
}

GameResult bounded_bisim(const Process& p, const Process& q, const GameConfig& cfg) {
  BoundedGame game(cfg.mode, cfg.cap);
  return game.play(p, q, cfg.depth);
}

bool replay(const Distinguisher& d, const Process& p, const Process& q, Mode mode) {
  if (d.moves.empty()) return false;
  Process left = canonicalize(p).process();
  Process right = canonicalize(q).process();
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    const GameMove& m = d.moves[i];
    const Process& attacker = m.side == Side::left ? left : right;
    const Process& defender = m.side == Side::left ? right : left;
    const auto attacks = successors(assume_canonical(attacker), mode);
    const auto answers = successors(assume_canonical(defender), mode);
    const bool legal = std::any_of(attacks.begin(), attacks.end(), [&](const Successor& s) {
      return s.label == m.label && s.destination == m.attacker;
    });
    if (!legal) return false;
    const bool last = i + 1 == d.moves.size();
    if (!m.defender) {
      // The defender must be stuck on the final move.
      return last && std::none_of(answers.begin(), answers.end(),
                                  [&](const Successor& s) { return s.label == m.label; });
    }
    if (last) return false;
    const bool answer = std::any_of(answers.begin(), answers.end(), [&](const Successor& s) {
      return s.label == m.label && s.destination == *m.defender;
    });
    if (!answer) return false;
    Process next_attacker = m.attacker;
    Process next_defender = *m.defender;
    if (m.side == Side::left) {
      left = std::move(next_attacker);
      right = std::move(next_defender);
    } else {
      right = std::move(next_attacker);
      left = std::move(next_defender);
    }
  }
  return false;
}

// -- dis / purg --------------------------------------------------------------------

namespace {

void require_replicated_only(const Process& s, const char* who) {
  if (!s.finite().empty()) {
    throw std::invalid_argument(std::string(who) + ": expected a process with replicated components only");
  }
}

}  // namespace

bool dis_check(const Process& s, const FiniteProcess& f) {
  require_replicated_only(s, "dis_check");
  std::vector<PrefixedTerm> keys;
  const CanonicalProcess canonical = canonicalize(s);
  for (const auto& r : canonical.process().replicated()) {
    FiniteProcess c = canonicalize(r);
    if (c.components().size() == 1) keys.push_back(c.components().front());
  }
  if (keys.empty()) return true;
  for (const auto& occ : occurrences(canonicalize(f))) {
    for (const auto& k : keys) {
      if (occ.term == k) return false;
    }
  }
  return true;
}

std::vector<FiniteProcess> derivatives(const FiniteProcess& f) {
  std::vector<FiniteProcess> out;
  for (const auto& c : reachable_within(Process(f), f.size(), Mode::base, f.size())) {
    out.push_back(c.process().finite());
  }
  return out;
}

namespace {

bool includes(const std::vector<PrefixedTerm>& big, const std::vector<PrefixedTerm>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<PrefixedTerm> minus(const std::vector<PrefixedTerm>& big,
                                const std::vector<PrefixedTerm>& small) {
  std::vector<PrefixedTerm> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                      std::back_inserter(out));
  return out;
}

bool partition(const std::vector<PrefixedTerm>& rest, const std::vector<FiniteProcess>& groups,
               std::set<std::vector<PrefixedTerm>>& failed) {
  if (rest.empty()) return true;
  if (failed.count(rest)) return false;
  // The smallest remaining component belongs to some group.
  const PrefixedTerm& first = rest.front();
  for (const auto& g : groups) {
    const auto& gc = g.components();
    if (!std::binary_search(gc.begin(), gc.end(), first)) continue;
    if (!includes(rest, gc)) continue;
    if (partition(minus(rest, gc), groups, failed)) return true;
  }
  failed.insert(rest);
  return false;
}

}  // namespace

bool purg_check(const Process& s, const FiniteProcess& r) {
  require_replicated_only(s, "purg_check");
  // At least one spawn is required; a fully consumed copy contributes 0.
  if (s.replicated().empty()) return false;
  const FiniteProcess residue = canonicalize(r);
  if (residue.empty()) return true;
  std::set<FiniteProcess> groups;
  const CanonicalProcess canonical = canonicalize(s);
  for (const auto& body : canonical.process().replicated()) {
    for (auto& d : derivatives(body.body())) {
      if (!d.empty()) groups.insert(std::move(d));
    }
  }
  std::vector<FiniteProcess> sorted(groups.begin(), groups.end());
  std::set<std::vector<PrefixedTerm>> failed;
  return partition(residue.components(), sorted, failed);
}

}  // namespace ccs
