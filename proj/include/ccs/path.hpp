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
#include <string>
#include <vector>

#include "ccs/syntax.hpp"

// Addresses inside a process, realising single-hole contexts.
//
//   C ::= D | !a.D | C|P        D ::= [] | a.D | D|F
//
// A context hole may sit below a replicated prefix but never replaces the
// replicated prefix itself.
namespace ccs {

enum class Root { finite, replicated };

/// Address of a prefixed-subterm occurrence. `steps` are component indices
/// in canonical order: the first indexes the finite part (Root::finite) or
/// the body of replicated component `replicated_index`, each later one
/// indexes the body of the previously selected component. Never empty.
struct Path {
  Root root = Root::finite;
  std::size_t replicated_index = 0;
  std::vector<std::size_t> steps;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Position of a context hole: the multiset reached by following `steps`
/// from the root, possibly the root multiset itself.
struct Hole {
  Root root = Root::finite;
  std::size_t replicated_index = 0;
  std::vector<std::size_t> steps;

  friend bool operator==(const Hole&, const Hole&) = default;
};

struct Occurrence {
  Path path;
  PrefixedTerm term;
};

/// Every addressable prefixed occurrence of p, in depth-first order.
std::vector<Occurrence> occurrences(const Process& p);
std::vector<Occurrence> occurrences(const FiniteProcess& f);

/// Every hole position of p.
std::vector<Hole> holes(const Process& p);

/// p with the addressed occurrence replaced by nil (not re-canonicalised).
Process delete_at(const Process& p, const Path& path);

/// p with the components of x added at the hole (not re-canonicalised).
Process plug(const Process& p, const Hole& hole, const FiniteProcess& x);

const PrefixedTerm& term_at(const Process& p, const Path& path);

std::string render(const Path& path);

}  // namespace ccs
