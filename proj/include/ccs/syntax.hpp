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
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/**
 * Abstract syntax for CCS processes built from prefix, parallel composition
 * and top-level replicated prefixes:
 *
 *   F ::= 0 | a.F | F|F
 *   P ::= F | !a.F | P|P
 *
 * Parallel composition is stored flattened as a sorted multiset, so the
 * abelian monoid laws hold structurally. All values are immutable once
 * constructed.
 */
namespace ccs {

/// Semantics selection. `sync` adds input/output polarities and the
/// synchronisation rules.
enum class Mode { base, sync };

enum class Polarity { plain, input, output };

struct Action {
  std::string name;
  Polarity polarity = Polarity::plain;

  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;
};

/// Same name, opposite input/output polarity.
bool are_coactions(const Action& a, const Action& b);

class PrefixedTerm;

/// Multiset of prefixed components; the empty multiset is nil.
class FiniteProcess {
 public:
  FiniteProcess() = default;
  explicit FiniteProcess(std::vector<PrefixedTerm> components);

  const std::vector<PrefixedTerm>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return size_; }
  std::size_t hash() const { return hash_; }

  /// Multiset union; both operands are already sorted.
  FiniteProcess merged(const FiniteProcess& other) const;

 private:
  struct Sorted {};
  FiniteProcess(Sorted, std::vector<PrefixedTerm> components);
  void finish();

  // Seed of the component hash, so that every nil hashes alike however it
  // was built.
  static constexpr std::size_t kEmptyHash = 0x51ed270b;

  std::vector<PrefixedTerm> components_;
  std::size_t size_ = 0;
  std::size_t hash_ = kEmptyHash;

  friend class PrefixedTerm;
  friend FiniteProcess from_sorted(std::vector<PrefixedTerm> components);
};

class PrefixedTerm {
 public:
  PrefixedTerm(Action head, FiniteProcess body);

  const Action& head() const { return head_; }
  const FiniteProcess& body() const { return body_; }
  /// 1 + size(body).
  std::size_t size() const { return body_.size() + 1; }
  std::size_t hash() const { return hash_; }

 private:
  Action head_;
  FiniteProcess body_;
  std::size_t hash_ = 0;
};

/// Structural order on terms: size first, then action name and polarity,
/// then the bodies lexicographically. This is the canonical component order.
std::strong_ordering compare(const PrefixedTerm& a, const PrefixedTerm& b);
std::strong_ordering compare(const FiniteProcess& a, const FiniteProcess& b);

inline bool operator==(const PrefixedTerm& a, const PrefixedTerm& b) {
  return a.hash() == b.hash() && compare(a, b) == 0;
}
inline bool operator<(const PrefixedTerm& a, const PrefixedTerm& b) {
  return compare(a, b) < 0;
}
inline bool operator==(const FiniteProcess& a, const FiniteProcess& b) {
  return a.hash() == b.hash() && compare(a, b) == 0;
}
inline bool operator<(const FiniteProcess& a, const FiniteProcess& b) {
  return compare(a, b) < 0;
}

/// Wraps components that are known to be in canonical order already.
FiniteProcess from_sorted(std::vector<PrefixedTerm> components);

/// A multiset of replicated prefixes `!a.F` next to a finite part.
class Process {
 public:
  Process() = default;
  explicit Process(FiniteProcess finite);
  Process(std::vector<PrefixedTerm> replicated, FiniteProcess finite);

  /// Each entry is understood under a bang.
  const std::vector<PrefixedTerm>& replicated() const { return replicated_; }
  const FiniteProcess& finite() const { return finite_; }

  bool is_finite() const { return replicated_.empty(); }
  bool is_nil() const { return replicated_.empty() && finite_.empty(); }
  std::size_t hash() const;

  /// Parallel composition.
  Process operator|(const Process& other) const;

 private:
  std::vector<PrefixedTerm> replicated_;
  FiniteProcess finite_;
};

std::strong_ordering compare(const Process& a, const Process& b);
inline bool operator==(const Process& a, const Process& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const Process& a, const Process& b) {
  return compare(a, b) < 0;
}

struct ProcessHash {
  std::size_t operator()(const Process& p) const { return p.hash(); }
  std::size_t operator()(const FiniteProcess& f) const { return f.hash(); }
};

// -- construction helpers ---------------------------------------------------

inline Action plain(std::string name) { return {std::move(name), Polarity::plain}; }
inline Action input(std::string name) { return {std::move(name), Polarity::input}; }
inline Action output(std::string name) { return {std::move(name), Polarity::output}; }

PrefixedTerm prefix(Action head, FiniteProcess body = {});
FiniteProcess par(std::vector<PrefixedTerm> components);
Process bang(const PrefixedTerm& term);

// -- parsing and printing ---------------------------------------------------

/// Base class of front-end errors; `position()` is a byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The input is not a sentence of the concrete grammar.
class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The input parses but violates a structural constraint of the fragment,
/// e.g. replication below a prefix.
class StructureError : public ParseError {
 public:
  StructureError(const std::string& constraint, std::size_t position)
      : ParseError(constraint, position), constraint_(constraint) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

Process parse(std::string_view text, Mode mode = Mode::base);
FiniteProcess parse_finite(std::string_view text, Mode mode = Mode::base);

std::string render(const Action& a);
std::string render(const PrefixedTerm& t);
std::string render(const FiniteProcess& f);
std::string render(const Process& p);

// -- measures ---------------------------------------------------------------

/// Number of prefix occurrences, replicated heads included.
std::size_t size(const Process& p);
inline std::size_t size(const FiniteProcess& f) { return f.size(); }

std::set<Action> alphabet(const Process& p);
std::set<std::string> names(const Process& p);

using Substitution = std::map<std::string, std::string>;

/// Renames every action name; names missing from `sigma` are kept.
Process apply_substitution(const Process& p, const Substitution& sigma);
FiniteProcess apply_substitution(const FiniteProcess& f, const Substitution& sigma);

}  // namespace ccs
