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

#include <optional>
#include <vector>

#include "ccs/syntax.hpp"

/**
 * The congruence generated by the abelian monoid laws of parallel
 * composition and the distribution law
 *
 *   a.(F | a.F | ... | a.F)  =  a.F | a.F | ... | a.F
 *
 * decided by normal forms. The law is oriented left to right and applied
 * innermost first; it never fires directly under a bang.
 */
namespace ccs {

/// A process with no distribution-law redex. Two processes are related by
/// the congruence iff their canonical forms are structurally equal.
class CanonicalProcess {
 public:
  const Process& process() const { return process_; }
  operator const Process&() const { return process_; }

  friend bool operator==(const CanonicalProcess& a, const CanonicalProcess& b) {
    return a.process_ == b.process_;
  }
  friend bool operator<(const CanonicalProcess& a, const CanonicalProcess& b) {
    return a.process_ < b.process_;
  }

 private:
  explicit CanonicalProcess(Process p) : process_(std::move(p)) {}
  Process process_;

  friend CanonicalProcess canonicalize(const Process& p);
  friend CanonicalProcess assume_canonical(Process p);
};

CanonicalProcess canonicalize(const Process& p);
FiniteProcess canonicalize(const FiniteProcess& f);

/// Canonical form of a single prefixed term, which is either the term
/// itself or several copies of a smaller prefixed term.
FiniteProcess canonicalize(const PrefixedTerm& t);

/// Wraps a process already known to be canonical. Checked in debug builds.
CanonicalProcess assume_canonical(Process p);

/// A distribution-law redex `a.(F | n a.F)` found in a term, described by
/// the lifted component `a.F` and the copy count n.
struct DistributionRedex {
  PrefixedTerm lifted;
  std::size_t copies;
};

/// Looks for a redex at the root of `t`, assuming its body is canonical.
std::optional<DistributionRedex> root_redex(const PrefixedTerm& t);

/// True iff no prefix anywhere in p (outside of bang heads) is a redex.
bool is_canonical(const Process& p);

bool eq_d(const Process& p, const Process& q);
bool eq_d(const FiniteProcess& f, const FiniteProcess& g);

}  // namespace ccs
