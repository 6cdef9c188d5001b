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

#include "ccs/lts.hpp"

#include <algorithm>
#include <set>

namespace ccs {

std::string render(const Label& l) { return l.tau ? "tau" : render(l.action); }

namespace {

// A top-level component able to fire: either a replicated prefix (which
// persists) or a finite component (which is consumed).
struct Firing {
  const PrefixedTerm* term;
  bool replicated;
  std::size_t index;
};

std::vector<Firing> firings(const Process& p) {
  std::vector<Firing> out;
  for (std::size_t i = 0; i < p.replicated().size(); ++i) {
    out.push_back({&p.replicated()[i], true, i});
  }
  const auto& fin = p.finite().components();
  for (std::size_t i = 0; i < fin.size(); ++i) {
    // Equal neighbours produce the same destination.
    if (i > 0 && fin[i] == fin[i - 1]) continue;
    out.push_back({&fin[i], false, i});
  }
  return out;
}

FiniteProcess without(const FiniteProcess& f, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<PrefixedTerm> rest;
  rest.reserve(f.components().size());
  for (std::size_t k = 0; k < f.components().size(); ++k) {
    if (k != i && k != j) rest.push_back(f.components()[k]);
  }
  return from_sorted(std::move(rest));
}

Process fire_one(const Process& p, const Firing& x) {
  FiniteProcess rest = x.replicated ? p.finite() : without(p.finite(), x.index);
  return Process(p.replicated(), rest.merged(x.term->body()));
}

Process fire_two(const Process& p, const Firing& x, const Firing& y) {
  FiniteProcess rest = p.finite();
  if (!x.replicated && !y.replicated) {
    rest = without(rest, x.index, y.index);
  } else if (!x.replicated) {
    rest = without(rest, x.index);
  } else if (!y.replicated) {
    rest = without(rest, y.index);
  }
  return Process(p.replicated(), rest.merged(x.term->body()).merged(y.term->body()));
}

}  // namespace

std::vector<Successor> successors(const CanonicalProcess& cp, Mode mode) {
  const Process& p = cp.process();
  std::vector<Successor> out;
  const auto fs = firings(p);
  for (const auto& x : fs) out.push_back({Label::visible(x.term->head()), fire_one(p, x)});
  if (mode == Mode::sync) {
    // Equal components share a head, so they never synchronise with each
    // other; listing equal finite components once loses no tau move.
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (are_coactions(fs[a].term->head(), fs[b].term->head())) {
          out.push_back({Label::internal(), fire_two(p, fs[a], fs[b])});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Successor& x, const Successor& y) {
    if (auto c = x.label <=> y.label; c != 0) return c < 0;
    return x.destination < y.destination;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Successor& x, const Successor& y) {
                          return x.label == y.label && x.destination == y.destination;
                        }),
            out.end());
  return out;
}

std::vector<Transition> transitions(const Process& p, Mode mode) {
  std::vector<Transition> out;
  for (auto& s : successors(canonicalize(p), mode)) {
    out.push_back({p, std::move(s.label), std::move(s.destination)});
  }
  return out;
}

bool reduct_k(const Process& p, const Process& q, std::size_t k) {
  std::set<Process> frontier{canonicalize(p).process()};
  for (std::size_t step = 0; step < k && !frontier.empty(); ++step) {
    std::set<Process> next;
    for (const auto& s : frontier) {
      for (auto& t : successors(assume_canonical(s), Mode::base)) {
        next.insert(std::move(t.destination));
      }
    }
    frontier = std::move(next);
  }
  return frontier.count(canonicalize(q).process()) > 0;
}

std::vector<CanonicalProcess> reachable_within(const Process& p, std::size_t depth,
                                               Mode mode, std::size_t cap) {
  if (depth > cap) throw DepthExceeded(depth, cap);
  std::set<Process> seen{canonicalize(p).process()};
  std::vector<Process> frontier(seen.begin(), seen.end());
  for (std::size_t step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<Process> next;
    for (const auto& s : frontier) {
      for (auto& t : successors(assume_canonical(s), mode)) {
        if (seen.insert(t.destination).second) next.push_back(std::move(t.destination));
      }
    }
    frontier = std::move(next);
  }
  std::vector<CanonicalProcess> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(assume_canonical(s));
  return out;
}

}  // namespace ccs
