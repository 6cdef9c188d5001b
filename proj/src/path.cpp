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

#include "ccs/path.hpp"

#include <functional>
#include <stdexcept>

namespace ccs {

namespace {

void walk(const FiniteProcess& f, Path& path, std::vector<Occurrence>& out) {
  const auto& cs = f.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    path.steps.push_back(i);
    out.push_back({path, cs[i]});
    walk(cs[i].body(), path, out);
    path.steps.pop_back();
  }
}

void walk_holes(const FiniteProcess& f, Hole& hole, std::vector<Hole>& out) {
  out.push_back(hole);
  const auto& cs = f.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    hole.steps.push_back(i);
    walk_holes(cs[i].body(), hole, out);
    hole.steps.pop_back();
  }
}

// Rebuilds f with the multiset at `steps[depth..]` transformed by `edit`.
using Edit = std::function<std::vector<PrefixedTerm>(const std::vector<PrefixedTerm>&)>;

FiniteProcess rebuild(const FiniteProcess& f, const std::vector<std::size_t>& steps,
                      std::size_t depth, const Edit& edit) {
  if (depth == steps.size()) return FiniteProcess(edit(f.components()));
  const auto& cs = f.components();
  const std::size_t i = steps[depth];
  if (i >= cs.size()) throw std::out_of_range("path step out of range");
  std::vector<PrefixedTerm> out = cs;
  out[i] = PrefixedTerm(cs[i].head(), rebuild(cs[i].body(), steps, depth + 1, edit));
  return FiniteProcess(std::move(out));
}

Process rebuild(const Process& p, Root root, std::size_t replicated_index,
                const std::vector<std::size_t>& steps, const Edit& edit) {
  if (root == Root::finite) {
    return Process(p.replicated(), rebuild(p.finite(), steps, 0, edit));
  }
  if (replicated_index >= p.replicated().size()) {
    throw std::out_of_range("replicated index out of range");
  }
  std::vector<PrefixedTerm> reps = p.replicated();
  const PrefixedTerm& r = reps[replicated_index];
  reps[replicated_index] = PrefixedTerm(r.head(), rebuild(r.body(), steps, 0, edit));
  return Process(std::move(reps), p.finite());
}

}  // namespace

std::vector<Occurrence> occurrences(const FiniteProcess& f) {
  std::vector<Occurrence> out;
  Path path;
  walk(f, path, out);
  return out;
}

std::vector<Occurrence> occurrences(const Process& p) {
  std::vector<Occurrence> out;
  Path path;
  for (std::size_t r = 0; r < p.replicated().size(); ++r) {
    path.root = Root::replicated;
    path.replicated_index = r;
    walk(p.replicated()[r].body(), path, out);
  }
  path.root = Root::finite;
  path.replicated_index = 0;
  walk(p.finite(), path, out);
  return out;
}

std::vector<Hole> holes(const Process& p) {
  std::vector<Hole> out;
  Hole hole;
  for (std::size_t r = 0; r < p.replicated().size(); ++r) {
    hole.root = Root::replicated;
    hole.replicated_index = r;
    walk_holes(p.replicated()[r].body(), hole, out);
  }
  hole.root = Root::finite;
  hole.replicated_index = 0;
  walk_holes(p.finite(), hole, out);
  return out;
}

Process delete_at(const Process& p, const Path& path) {
  if (path.steps.empty()) throw std::invalid_argument("empty occurrence path");
  std::vector<std::size_t> parent(path.steps.begin(), path.steps.end() - 1);
  const std::size_t victim = path.steps.back();
  return rebuild(p, path.root, path.replicated_index, parent,
                 [victim](const std::vector<PrefixedTerm>& cs) {
                   if (victim >= cs.size()) throw std::out_of_range("path step out of range");
                   std::vector<PrefixedTerm> out;
                   out.reserve(cs.size() - 1);
                   for (std::size_t i = 0; i < cs.size(); ++i) {
                     if (i != victim) out.push_back(cs[i]);
                   }
                   return out;
                 });
}

Process plug(const Process& p, const Hole& hole, const FiniteProcess& x) {
  return rebuild(p, hole.root, hole.replicated_index, hole.steps,
                 [&x](const std::vector<PrefixedTerm>& cs) {
                   std::vector<PrefixedTerm> out = cs;
                   out.insert(out.end(), x.components().begin(), x.components().end());
                   return out;
                 });
}

const PrefixedTerm& term_at(const Process& p, const Path& path) {
  if (path.steps.empty()) throw std::invalid_argument("empty occurrence path");
  const FiniteProcess* f = nullptr;
  if (path.root == Root::finite) {
    f = &p.finite();
  } else {
    if (path.replicated_index >= p.replicated().size()) {
      throw std::out_of_range("replicated index out of range");
    }
    f = &p.replicated()[path.replicated_index].body();
  }
  const PrefixedTerm* t = nullptr;
  for (std::size_t i : path.steps) {
    if (i >= f->components().size()) throw std::out_of_range("path step out of range");
    t = &f->components()[i];
    f = &t->body();
  }
  return *t;
}

std::string render(const Path& path) {
  std::string out = path.root == Root::finite
                        ? std::string("finite")
                        : "replicated[" + std::to_string(path.replicated_index) + "]";
  for (std::size_t i : path.steps) out += "/" + std::to_string(i);
  return out;
}

}  // namespace ccs
