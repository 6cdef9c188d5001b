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

#include "ccs/eqd.hpp"

#include <algorithm>
#include <cassert>

namespace ccs {

std::optional<DistributionRedex> root_redex(const PrefixedTerm& t) {
  const auto& body = t.body().components();
  const std::size_t total = t.body().size();
  // Candidates a.G are scanned in canonical order, copy counts ascending;
  // the first match wins.
  for (std::size_t i = 0; i < body.size();) {
    std::size_t j = i + 1;
    while (j < body.size() && body[j] == body[i]) ++j;
    const PrefixedTerm& c = body[i];
    if (c.head() == t.head()) {
      const std::size_t g = c.body().size();
      for (std::size_t n = 1; n <= j - i; ++n) {
        // size(B) = size(G) + n * (1 + size(G))
        if (g * (n + 1) + n != total) continue;
        std::vector<PrefixedTerm> rest;
        rest.reserve(body.size() - n);
        rest.insert(rest.end(), body.begin(), body.begin() + static_cast<std::ptrdiff_t>(i));
        rest.insert(rest.end(), body.begin() + static_cast<std::ptrdiff_t>(i + n), body.end());
        if (from_sorted(std::move(rest)) == c.body()) return DistributionRedex{c, n};
      }
    }
    i = j;
  }
  return std::nullopt;
}

namespace {

void canonical_components(const PrefixedTerm& t, std::vector<PrefixedTerm>& out) {
  PrefixedTerm inner(t.head(), canonicalize(t.body()));
  if (auto redex = root_redex(inner)) {
    for (std::size_t k = 0; k <= redex->copies; ++k) out.push_back(redex->lifted);
  } else {
    out.push_back(std::move(inner));
  }
}

bool term_is_canonical(const PrefixedTerm& t);

bool finite_is_canonical(const FiniteProcess& f) {
  return std::all_of(f.components().begin(), f.components().end(), term_is_canonical);
}

bool term_is_canonical(const PrefixedTerm& t) {
  return finite_is_canonical(t.body()) && !root_redex(t);
}

}  // namespace

FiniteProcess canonicalize(const PrefixedTerm& t) {
  std::vector<PrefixedTerm> out;
  canonical_components(t, out);
  return from_sorted(std::move(out));
}

FiniteProcess canonicalize(const FiniteProcess& f) {
  if (f.empty()) return f;
  std::vector<PrefixedTerm> out;
  out.reserve(f.components().size());
  for (const auto& c : f.components()) canonical_components(c, out);
  std::sort(out.begin(), out.end());
  return from_sorted(std::move(out));
}

CanonicalProcess canonicalize(const Process& p) {
  std::vector<PrefixedTerm> reps;
  reps.reserve(p.replicated().size());
  for (const auto& r : p.replicated()) {
    reps.emplace_back(r.head(), canonicalize(r.body()));
  }
  return CanonicalProcess(Process(std::move(reps), canonicalize(p.finite())));
}

CanonicalProcess assume_canonical(Process p) {
  assert(is_canonical(p));
  return CanonicalProcess(std::move(p));
}

bool is_canonical(const Process& p) {
  for (const auto& r : p.replicated()) {
    if (!finite_is_canonical(r.body())) return false;
  }
  return finite_is_canonical(p.finite());
}

bool eq_d(const Process& p, const Process& q) {
  return size(p) == size(q) && canonicalize(p) == canonicalize(q);
}

bool eq_d(const FiniteProcess& f, const FiniteProcess& g) {
  return f.size() == g.size() && canonicalize(f) == canonicalize(g);
}

}  // namespace ccs
