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

#include "ccs/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "ccs/corpus.hpp"
#include "ccs/eqd.hpp"
#include "ccs/oracle.hpp"
#include "ccs/path.hpp"

namespace ccs {

void PropertyReport::fail(std::string description, std::vector<std::string> terms) {
  ++violations;
  if (counterexamples.size() < kMaxReported) {
    counterexamples.push_back({std::move(description), std::move(terms)});
  }
}

void PropertyReport::note(const std::string& key, std::size_t count) {
  for (auto& [k, v] : notes) {
    if (k == key) {
      v += count;
      return;
    }
  }
  notes.emplace_back(key, count);
}

void PropertyReport::merge(const PropertyReport& other) {
  instances += other.instances;
  hypothesis_hits += other.hypothesis_hits;
  violations += other.violations;
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < kMaxReported) counterexamples.push_back(c);
  }
  for (const auto& [k, v] : other.notes) note(k, v);
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyReport& p) { return p.passed(); });
}

const PropertyReport* SuiteReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

std::size_t worker_count(const SuiteConfig& cfg) {
  if (cfg.threads) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i, report) for i in [0, n) over contiguous shards and merges
// the shard reports in shard order.
PropertyReport sharded(std::string name, std::size_t n, const SuiteConfig& cfg,
                       const std::function<void(std::size_t, PropertyReport&)>& body) {
  const std::size_t workers = std::min(worker_count(cfg), std::max<std::size_t>(n, 1));
  std::vector<PropertyReport> parts(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) body(i, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  PropertyReport out;
  out.name = std::move(name);
  for (const auto& p : parts) out.merge(p);
  return out;
}

Process replicated_part(const Process& p) { return Process(p.replicated(), {}); }

// Corpus members grouped by seed, in corpus order.
std::map<Process, std::vector<Process>> seed_classes(const std::vector<Process>& corpus,
                                                     SeedCache& cache) {
  std::map<Process, std::vector<Process>> out;
  for (const auto& p : corpus) out[cache.seed(p).seed.process()].push_back(p);
  return out;
}

// Distinct replicated-only seeds of the corpus with at most max_size
// prefixes.
std::vector<Process> replicated_seeds(const std::vector<Process>& corpus, SeedCache& cache,
                                      std::size_t max_size) {
  std::set<Process> out;
  for (const auto& p : corpus) {
    const Process& s = cache.seed(p).seed.process();
    if (!s.replicated().empty() && s.finite().empty() && size(s) <= max_size) out.insert(s);
  }
  return {out.begin(), out.end()};
}

std::string describe_game(const GameResult& g) {
  if (g.equivalent) return "equivalent";
  std::string out = "distinguished at depth " + std::to_string(g.distinguisher->depth()) + ":";
  for (const auto& m : g.distinguisher->moves) {
    out += m.side == Side::left ? " L:" : " R:";
    out += render(m.label);
  }
  return out;
}

}  // namespace

std::vector<Process> standard_corpus(const SuiteConfig& cfg) {
  const auto actions = actions_for(cfg.alphabet, cfg.mode);
  std::vector<Process> corpus = all_processes(cfg.max_size, actions);
  RandomGenerator rng(cfg.seed);
  const std::size_t lo = cfg.max_size < cfg.random_max_size ? cfg.max_size + 1 : 1;
  for (std::size_t i = 0; i < cfg.random_count; ++i) {
    const std::size_t n = lo + rng.below(cfg.random_max_size - lo + 1);
    corpus.push_back(rng.process(n, actions));
  }
  return corpus;
}

// -- characterisation -----------------------------------------------------------

PropertyReport check_characterisation(const std::vector<Process>& corpus, SeedCache& cache,
                                      const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "characterisation";

  // Small members: one shared game so signatures are comparable, then
  // every pair is judged at once by comparing the two partitions.
  std::vector<const Process*> small;
  std::vector<const Process*> large;
  for (const auto& p : corpus) (size(p) <= cfg.max_size ? small : large).push_back(&p);
  {
    BoundedGame game(cfg.mode);
    std::map<Process, std::vector<std::size_t>> by_seed;
    std::map<int, std::set<Process>> seeds_by_signature;
    std::vector<int> sig(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      sig[i] = game.signature(*small[i], cfg.depth);
      const Process& s = cache.seed(*small[i]).seed.process();
      by_seed[s].push_back(i);
      seeds_by_signature[sig[i]].insert(s);
    }
    const std::size_t n = small.size();
    report.instances += n * (n - 1) / 2;
    for (const auto& [seed, members] : by_seed) {
      report.hypothesis_hits += members.size() * (members.size() - 1) / 2;
      for (std::size_t k = 1; k < members.size(); ++k) {
        const Process& p = *small[members.front()];
        const Process& q = *small[members[k]];
        if (sig[members[k]] == sig[members.front()]) continue;
        // Re-run the pair alone for a readable witness.
        report.fail("convertible (seed " + render(seed) + ") but " +
                        describe_game(bounded_bisim(p, q, {cfg.depth, cfg.mode})),
                    {render(p), render(q)});
      }
    }
    // Pairs the game cannot separate within the bound although their seeds
    // differ: not a contradiction, only inconclusive at this depth.
    std::size_t inconclusive = 0;
    for (const auto& [s, seeds] : seeds_by_signature) {
      std::size_t total = 0;
      std::vector<std::size_t> counts;
      for (const auto& seed : seeds) counts.push_back(by_seed[seed].size());
      for (std::size_t c : counts) total += c;
      std::size_t same = 0;
      for (std::size_t c : counts) same += c * (c - 1) / 2;
      inconclusive += total * (total - 1) / 2 - same;
    }
    report.note("inconclusive pairs", inconclusive);
  }

  // Larger members: against their own seed and the next large member.
  PropertyReport rest = sharded("characterisation", large.size(), cfg,
                                [&](std::size_t i, PropertyReport& r) {
    const Process& p = *large[i];
    const Process& s = cache.seed(p).seed.process();
    ++r.instances;
    ++r.hypothesis_hits;
    {
      BoundedGame game(cfg.mode);
      auto g = game.play(p, s, cfg.depth);
      if (!g.equivalent) {
        r.fail("process and its seed " + describe_game(g), {render(p), render(s)});
      }
    }
    if (i + 1 < large.size()) {
      const Process& q = *large[i + 1];
      ++r.instances;
      const bool conv = cache.convertible(p, q);
      BoundedGame game(cfg.mode);
      auto g = game.play(p, q, cfg.depth);
      if (conv) ++r.hypothesis_hits;
      if (conv && !g.equivalent) {
        r.fail("convertible but " + describe_game(g), {render(p), render(q)});
      }
      if (!conv && g.equivalent) r.note("inconclusive pairs");
    }
  });
  report.merge(rest);
  return report;
}

PropertyReport check_finite_congruence(const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "finite-congruence";
  const auto fs = all_finite(cfg.max_size, actions_for(cfg.alphabet, cfg.mode));
  FiniteBisimSolver solver(cfg.mode);
  std::vector<int> ids;
  std::vector<FiniteProcess> canon;
  for (const auto& f : fs) {
    ids.push_back(solver.class_id(f));
    canon.push_back(canonicalize(f));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      ++report.instances;
      const bool bisim = ids[i] == ids[j];
      if (bisim && i != j) ++report.hypothesis_hits;
      if (bisim != (canon[i] == canon[j])) {
        report.fail(bisim ? "bisimilar but not congruent" : "congruent but not bisimilar",
                    {render(fs[i]), render(fs[j])});
      }
    }
  }
  return report;
}

// -- seeds ------------------------------------------------------------------------

PropertyReport check_seed_uniqueness(const std::vector<Process>& corpus, const SuiteConfig& cfg) {
  return sharded("seed-uniqueness", corpus.size(), cfg, [&](std::size_t i, PropertyReport& r) {
    const Process& p = corpus[i];
    ++r.instances;
    try {
      auto up = compute_seed(p, {CandidateOrder::ascending, false});
      auto down = compute_seed(p, {CandidateOrder::descending, false});
      if (up.candidates != down.candidates) ++r.hypothesis_hits;
      if (!(up.seed == down.seed)) {
        r.fail("candidate orders disagree",
               {render(p), render(up.seed.process()), render(down.seed.process())});
      }
      compute_seed(p, {CandidateOrder::ascending, true});
    } catch (const std::logic_error& e) {
      r.fail(e.what(), {render(p)});
    }
  });
}

PropertyReport check_seed_reachability(const std::vector<Process>& corpus, SeedCache& cache,
                                       const SuiteConfig& cfg) {
  return sharded("seed-reachability", corpus.size(), cfg, [&](std::size_t i, PropertyReport& r) {
    const Process& p = corpus[i];
    const Process& s = cache.seed(p).seed.process();
    ++r.instances;
    if (!eq_d(p, s)) ++r.hypothesis_hits;
    SearchStats stats;
    auto trace = rewrites_to(p, s, &stats);
    const std::size_t n = size(p);
    if (n < 63 && stats.visited > (std::size_t{1} << n)) {
      r.fail("guided search visited " + std::to_string(stats.visited) + " states", {render(p)});
    }
    if (!trace) {
      r.fail("no guided rewrite to the seed", {render(p), render(s)});
    } else if (!trace->empty() && !(trace->back().after == s)) {
      r.fail("trace does not end at the seed", {render(p), render(s)});
    }
  });
}

PropertyReport check_seed_disjointness(const std::vector<Process>& corpus, SeedCache& cache,
                                       const SuiteConfig& cfg) {
  return sharded("seed-disjointness", corpus.size(), cfg, [&](std::size_t i, PropertyReport& r) {
    const Process& s = cache.seed(corpus[i]).seed.process();
    ++r.instances;
    if (s.replicated().empty() || s.finite().empty()) return;
    ++r.hypothesis_hits;
    if (!dis_check(replicated_part(s), s.finite())) {
      r.fail("seed has a finite occurrence of a replicated body", {render(corpus[i]), render(s)});
    }
  });
}

// -- laws ---------------------------------------------------------------------------

PropertyReport check_absorption_law(const SuiteConfig& cfg, SeedCache& cache) {
  PropertyReport report;
  report.name = "absorption-law";
  const auto actions = actions_for(cfg.alphabet, cfg.mode);
  RandomGenerator rng(cfg.seed ^ 0xa5a5a5a5ULL);
  for (std::size_t i = 0; i < cfg.law_instances; ++i) {
    const PrefixedTerm body(actions[rng.below(actions.size())], rng.finite(rng.below(3), actions));
    const Process s = bang(body);
    const Process context = rng.process(rng.below(5), actions);
    const Hole hole = rng.hole(context);
    const Process filled = s | plug(context, hole, from_sorted({body}));
    const Process empty = s | context;
    ++report.instances;
    ++report.hypothesis_hits;
    if (!cache.convertible(filled, empty)) {
      report.fail("not convertible", {render(filled), render(empty)});
    }
  }
  return report;
}

PropertyReport check_self_absorption_law(const SuiteConfig& cfg, SeedCache& cache) {
  PropertyReport report;
  report.name = "self-absorption-law";
  const auto actions = actions_for(cfg.alphabet, cfg.mode);
  RandomGenerator rng(cfg.seed ^ 0x5a5a5a5aULL);
  for (std::size_t i = 0; i < cfg.law_instances; ++i) {
    const Action& a = actions[rng.below(actions.size())];
    const FiniteProcess d0 = rng.finite(rng.below(4), actions);
    const Hole hole = rng.finite_hole(d0);
    const PrefixedTerm inner(a, d0);
    const FiniteProcess nested = plug(Process(d0), hole, from_sorted({inner})).finite();
    const Process lhs = bang(PrefixedTerm(a, nested));
    const Process rhs = bang(inner);
    ++report.instances;
    ++report.hypothesis_hits;
    if (!cache.convertible(lhs, rhs)) report.fail("not convertible", {render(lhs), render(rhs)});
  }
  return report;
}

PropertyReport check_substitution_closure(const std::vector<Process>& corpus, SeedCache& cache,
                                          const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "substitution-closure";
  // Convertible pairs: every member against its seed and against the first
  // member of its class.
  std::vector<std::pair<Process, Process>> pairs;
  for (const auto& [seed, members] : seed_classes(corpus, cache)) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (!(canonicalize(members[k]).process() == seed)) pairs.emplace_back(members[k], seed);
      if (k > 0) pairs.emplace_back(members[k], members.front());
    }
  }
  if (pairs.empty()) return report;
  RandomGenerator rng(cfg.seed ^ 0x3c3c3c3cULL);
  std::vector<std::string> targets;
  for (const auto& a : actions_for(cfg.alphabet + 1, Mode::base)) targets.push_back(a.name);
  for (std::size_t i = 0; i < cfg.substitution_pairs; ++i) {
    const auto& [p, q] = pairs[rng.below(pairs.size())];
    std::set<std::string> used = names(p);
    for (const auto& n : names(q)) used.insert(n);
    std::vector<std::string> from(used.begin(), used.end());
    const Substitution sigma = rng.substitution(from, targets);
    std::set<std::string> image;
    for (const auto& [k, v] : sigma) image.insert(v);
    ++report.instances;
    if (image.size() < from.size()) ++report.hypothesis_hits;
    const Process ps = apply_substitution(p, sigma);
    const Process qs = apply_substitution(q, sigma);
    if (!cache.convertible(ps, qs)) {
      std::string s;
      for (const auto& [k, v] : sigma) s += (s.empty() ? "" : ",") + k + "->" + v;
      report.fail("renaming " + s + " breaks convertibility", {render(p), render(q)});
    }
  }
  report.note("non-injective renamings", report.hypothesis_hits);
  report.hypothesis_hits = report.instances;
  return report;
}

// -- structural properties -----------------------------------------------------------

PropertyReport check_hole_filling(const std::vector<Process>& corpus, SeedCache& cache,
                                  const SuiteConfig& cfg) {
  return sharded("hole-filling", corpus.size(), cfg, [&](std::size_t i, PropertyReport& r) {
    if (size(corpus[i]) > cfg.max_size) return;
    const Process p = canonicalize(corpus[i]).process();
    // p ~ seed(p) = !a.F | P for every replicated a.F of the seed.
    const Process& s = cache.seed(p).seed.process();
    std::set<PrefixedTerm> bodies(s.replicated().begin(), s.replicated().end());
    if (bodies.empty()) {
      ++r.instances;
      return;
    }
    BoundedGame game(cfg.mode);
    for (const auto& body : bodies) {
      for (const auto& hole : holes(p)) {
        ++r.instances;
        ++r.hypothesis_hits;
        const Process filled = plug(p, hole, from_sorted({body}));
        auto g = game.play(p, filled, cfg.depth);
        if (!g.equivalent) {
          r.fail("filling a hole with " + render(body) + " is observable: " + describe_game(g),
                 {render(p), render(filled)});
        }
      }
    }
  });
}

PropertyReport check_replicated_absorption(const std::vector<Process>& corpus,
                                           SeedCache& cache, const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "replicated-absorption";
  (void)cfg;
  constexpr std::size_t kPerClass = 6;
  for (const auto& [seed, members] : seed_classes(corpus, cache)) {
    std::vector<Process> bangs;
    std::vector<Process> mixed;
    for (const auto& m : members) {
      if (m.finite().empty()) {
        if (bangs.size() < kPerClass) bangs.push_back(m);
      } else if (mixed.size() < kPerClass) {
        mixed.push_back(m);
      }
    }
    for (const auto& x : bangs) {
      // Non-members give instances whose hypothesis fails.
      ++report.instances;
      for (const auto& y : mixed) {
        std::set<PrefixedTerm> heads(y.finite().components().begin(),
                                     y.finite().components().end());
        for (const auto& c : heads) {
          ++report.instances;
          ++report.hypothesis_hits;
          const Process grown = x | Process(from_sorted({c}));
          if (!cache.convertible(x, grown)) {
            report.fail("finite component not absorbed: " + render(c),
                        {render(x), render(y), render(grown)});
          }
        }
      }
    }
  }
  return report;
}

PropertyReport check_residue_vanishes(const std::vector<Process>& corpus, SeedCache& cache,
                                      const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "residue-vanishes";
  const auto seeds = replicated_seeds(corpus, cache, cfg.max_size);
  const auto actions = actions_for(cfg.alphabet, cfg.mode);
  RandomGenerator rng(cfg.seed ^ 0x77777777ULL);
  for (const auto& s : seeds) {
    // Residues built from derivatives of the bodies, plus random noise.
    std::set<FiniteProcess> residues;
    std::vector<FiniteProcess> ds;
    for (const auto& r : s.replicated()) {
      for (auto& d : derivatives(r.body())) {
        if (!d.empty()) ds.push_back(d);
      }
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      residues.insert(ds[i]);
      for (std::size_t j = i; j < ds.size() && j < i + 3; ++j) residues.insert(ds[i].merged(ds[j]));
    }
    for (int k = 0; k < 3; ++k) residues.insert(rng.finite(1 + rng.below(3), actions));
    for (const auto& r : residues) {
      ++report.instances;
      if (!purg_check(s, r)) continue;
      ++report.hypothesis_hits;
      const Process grown = s | Process(r);
      if (cache.convertible(s, grown)) {
        report.fail("nonzero residue absorbed by its seed", {render(s), render(r)});
      }
    }
  }
  return report;
}

PropertyReport check_replicated_cancellation(const std::vector<Process>& corpus,
                                             SeedCache& cache, const SuiteConfig& cfg) {
  (void)cfg;
  PropertyReport report;
  report.name = "replicated-cancellation";
  for (const auto& [seed, members] : seed_classes(corpus, cache)) {
    const Process base = replicated_part(members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      ++report.instances;
      ++report.hypothesis_hits;
      const Process other = replicated_part(members[k]);
      if (!cache.convertible(base, other)) {
        report.fail("replicated parts of bisimilar processes differ",
                    {render(members.front()), render(members[k])});
      }
    }
  }
  return report;
}

PropertyReport check_finite_cancellation(const std::vector<Process>& corpus, SeedCache& cache,
                                         const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "finite-cancellation";
  const std::size_t bound = std::min<std::size_t>(cfg.max_size, 3);
  const auto seeds = replicated_seeds(corpus, cache, bound);
  const auto finite = all_finite(bound, actions_for(cfg.alphabet, cfg.mode));
  FiniteBisimSolver solver(cfg.mode);
  for (const auto& s : seeds) {
    std::map<Process, std::vector<const FiniteProcess*>> classes;
    for (const auto& f : finite) {
      ++report.instances;
      if (!dis_check(s, f)) continue;
      classes[cache.seed(s | Process(f)).seed.process()].push_back(&f);
    }
    for (const auto& [seed, fs] : classes) {
      for (std::size_t k = 1; k < fs.size(); ++k) {
        ++report.hypothesis_hits;
        if (!solver.bisimilar(*fs.front(), *fs[k])) {
          report.fail("finite parts over a common replicated seed are not bisimilar",
                      {render(s), render(*fs.front()), render(*fs[k])});
        }
      }
    }
  }
  return report;
}

PropertyReport check_predicate_closure(const std::vector<Process>& corpus,
                                       const SuiteConfig& cfg) {
  PropertyReport report;
  report.name = "predicate-closure";
  std::set<Process> bangs;
  for (const auto& p : corpus) {
    if (p.finite().empty() && !p.replicated().empty() && size(p) <= 3) bangs.insert(p);
  }
  const std::size_t bound = std::min<std::size_t>(cfg.max_size, 3);
  const auto finite = all_finite(bound, actions_for(cfg.alphabet, cfg.mode));
  for (const auto& s : bangs) {
    std::vector<FiniteProcess> args(finite.begin(), finite.end());
    for (const auto& r : s.replicated()) {
      for (auto& d : derivatives(r.body())) args.push_back(std::move(d));
    }
    for (const auto& f : args) {
      ++report.instances;
      const bool dis = dis_check(s, f);
      const bool purg = purg_check(s, f);
      if (!dis && !purg) continue;
      for (const auto& t : transitions(Process(f), Mode::base)) {
        ++report.hypothesis_hits;
        const FiniteProcess& next = t.destination.finite();
        if (dis && !dis_check(s, next)) {
          report.fail("dis not preserved by a step", {render(s), render(f), render(next)});
        }
        if (purg && !purg_check(s, next)) {
          report.fail("purg not preserved by a step", {render(s), render(f), render(next)});
        }
      }
    }
  }
  return report;
}

// -- termination -----------------------------------------------------------------------

PropertyReport check_termination(const SeedCache& cache) {
  PropertyReport report;
  report.name = "termination";
  for (const auto& [input, result] : cache.entries()) {
    const std::size_t n = size(input);
    if (n < 63 && result.max_visited > (std::size_t{1} << n)) {
      report.fail("guided search visited " + std::to_string(result.max_visited) + " states",
                  {render(input)});
    }
    if (!result.trace.empty()) ++report.hypothesis_hits;
    Process at = input;
    for (const auto& step : result.trace) {
      ++report.instances;
      if (!(step.before == at)) report.fail("trace is not contiguous", {render(input)});
      if (size(step.after) >= size(step.before)) {
        report.fail("step does not decrease size", {render(step.before), render(step.after)});
      }
      bool valid = false;
      if (step.axiom == Axiom::b1 && step.occurrence && step.justification) {
        FiniteProcess key = canonicalize(*step.justification);
        const PrefixedTerm& hit = term_at(step.before, *step.occurrence);
        const bool licensed = std::count(result.seed.process().replicated().begin(),
                                         result.seed.process().replicated().end(),
                                         *step.justification) > 0;
        valid = licensed && key.components().size() == 1 && key.components().front() == hit &&
                canonicalize(delete_at(step.before, *step.occurrence)).process() == step.after;
      } else if (step.axiom == Axiom::b2 && step.replicated_index) {
        const auto& reps = step.before.replicated();
        const std::size_t i = *step.replicated_index;
        valid = i > 0 && i < reps.size() && reps[i] == reps[i - 1] &&
                step.after.replicated().size() + 1 == reps.size() &&
                step.after.finite() == step.before.finite();
      }
      if (!valid) report.fail("step does not follow from its axiom", {render(step.before), render(step.after)});
      at = step.after;
    }
    if (!(at == result.seed.process())) report.fail("trace does not end at the seed", {render(input)});
  }
  return report;
}

// -- driver ----------------------------------------------------------------------------

SuiteReport lemma_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  const auto corpus = standard_corpus(cfg);
  SeedCache cache;
  auto& ps = report.properties;
  ps.push_back(check_finite_congruence(cfg));
  ps.push_back(check_characterisation(corpus, cache, cfg));
  ps.push_back(check_seed_uniqueness(corpus, cfg));
  ps.push_back(check_seed_reachability(corpus, cache, cfg));
  ps.push_back(check_seed_disjointness(corpus, cache, cfg));
  ps.push_back(check_hole_filling(corpus, cache, cfg));
  ps.push_back(check_replicated_absorption(corpus, cache, cfg));
  ps.push_back(check_residue_vanishes(corpus, cache, cfg));
  ps.push_back(check_replicated_cancellation(corpus, cache, cfg));
  ps.push_back(check_finite_cancellation(corpus, cache, cfg));
  ps.push_back(check_predicate_closure(corpus, cfg));
  ps.push_back(check_absorption_law(cfg, cache));
  ps.push_back(check_self_absorption_law(cfg, cache));
  ps.push_back(check_substitution_closure(corpus, cache, cfg));
  ps.push_back(check_termination(cache));
  return report;
}

}  // namespace ccs
