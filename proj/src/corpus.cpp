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

#include "ccs/corpus.hpp"

#include <algorithm>

namespace ccs {

std::vector<Action> actions_for(std::size_t n, Mode mode) {
  std::vector<Action> out;
  for (std::size_t i = 0; out.size() < n; ++i) {
    std::string name(1, static_cast<char>('a' + i));
    if (mode == Mode::base) {
      out.push_back(plain(name));
    } else {
      out.push_back(input(name));
      if (out.size() < n) out.push_back(output(name));
    }
  }
  return out;
}

namespace {

// Terms sorted in canonical order, which is size first, so forests of size
// n only draw from the prefix of terms of size <= n.
class Enumerator {
 public:
  Enumerator(std::size_t max_size, const std::vector<Action>& actions) {
    for (std::size_t n = 1; n <= max_size; ++n) {
      std::vector<PrefixedTerm> fresh;
      for (const auto& body : forests(n - 1)) {
        for (const auto& a : actions) fresh.emplace_back(a, body);
      }
      std::sort(fresh.begin(), fresh.end());
      terms_.insert(terms_.end(), fresh.begin(), fresh.end());
    }
  }

  /// All multisets of terms with total size exactly n.
  std::vector<FiniteProcess> forests(std::size_t n) const {
    std::vector<FiniteProcess> out;
    std::vector<PrefixedTerm> current;
    extend(0, n, current, out);
    return out;
  }

 private:
  void extend(std::size_t start, std::size_t remaining, std::vector<PrefixedTerm>& current,
              std::vector<FiniteProcess>& out) const {
    if (remaining == 0) {
      out.push_back(from_sorted(current));
      return;
    }
    for (std::size_t i = start; i < terms_.size() && terms_[i].size() <= remaining; ++i) {
      current.push_back(terms_[i]);
      extend(i, remaining - terms_[i].size(), current, out);
      current.pop_back();
    }
  }

  std::vector<PrefixedTerm> terms_;
};

}  // namespace

std::vector<FiniteProcess> all_finite(std::size_t max_size, const std::vector<Action>& actions) {
  Enumerator e(max_size, actions);
  std::vector<FiniteProcess> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    auto fs = e.forests(n);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<Process> all_processes(std::size_t max_size, const std::vector<Action>& actions) {
  Enumerator e(max_size, actions);
  std::vector<std::vector<FiniteProcess>> by_size;
  for (std::size_t n = 0; n <= max_size; ++n) by_size.push_back(e.forests(n));
  std::vector<Process> out;
  for (std::size_t total = 0; total <= max_size; ++total) {
    for (std::size_t r = 0; r <= total; ++r) {
      for (const auto& reps : by_size[r]) {
        for (const auto& fin : by_size[total - r]) {
          out.emplace_back(reps.components(), fin);
        }
      }
    }
  }
  return out;
}

PrefixedTerm RandomGenerator::term(std::size_t size, const std::vector<Action>& actions) {
  const Action& a = actions[below(actions.size())];
  return PrefixedTerm(a, finite(size - 1, actions));
}

FiniteProcess RandomGenerator::finite(std::size_t size, const std::vector<Action>& actions) {
  std::vector<PrefixedTerm> cs;
  while (size > 0) {
    const std::size_t k = 1 + below(size);
    cs.push_back(term(k, actions));
    size -= k;
  }
  return FiniteProcess(std::move(cs));
}

Process RandomGenerator::process(std::size_t size, const std::vector<Action>& actions) {
  const std::size_t budget = below(size + 1);
  FiniteProcess reps = finite(budget, actions);
  return Process(reps.components(), finite(size - budget, actions));
}

Hole RandomGenerator::hole(const Process& p) {
  const auto hs = holes(p);
  return hs[below(hs.size())];
}

Hole RandomGenerator::finite_hole(const FiniteProcess& f) { return hole(Process(f)); }

Substitution RandomGenerator::substitution(const std::vector<std::string>& from,
                                           const std::vector<std::string>& to) {
  Substitution sigma;
  for (const auto& n : from) sigma[n] = to[below(to.size())];
  return sigma;
}

}  // namespace ccs
