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

#include "ccs/cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccs/eqd.hpp"
#include "ccs/lts.hpp"
#include "ccs/oracle.hpp"
#include "ccs/path.hpp"
#include "ccs/rewrite.hpp"
#include "ccs/suite.hpp"

namespace ccs::cli {

using Json = nlohmann::ordered_json;

namespace {

const char* mode_name(Mode m) { return m == Mode::sync ? "sync" : "base"; }

Json path_json(const Path& path) {
  Json j;
  j["root"] = path.root == Root::finite ? "finite" : "replicated";
  j["index"] = path.root == Root::finite ? Json(nullptr) : Json(path.replicated_index);
  j["steps"] = path.steps;
  return j;
}

Json step_json(const RewriteStep& s) {
  Json j;
  j["axiom"] = to_string(s.axiom);
  j["occurrence"] = s.occurrence ? path_json(*s.occurrence) : Json(nullptr);
  j["replicated_index"] = s.replicated_index ? Json(*s.replicated_index) : Json(nullptr);
  j["before"] = render(s.before);
  j["after"] = render(s.after);
  j["justification"] = s.justification ? Json("!" + render(*s.justification)) : Json(nullptr);
  return j;
}

Json trace_json(const Trace& t) {
  Json j = Json::array();
  for (const auto& s : t) j.push_back(step_json(s));
  return j;
}

std::string step_text(const RewriteStep& s) {
  std::string out = to_string(s.axiom);
  if (s.occurrence) out += " at " + render(*s.occurrence);
  if (s.replicated_index) out += " at replicated[" + std::to_string(*s.replicated_index) + "]";
  out += ": " + render(s.before) + "  ~>  " + render(s.after);
  if (s.justification) out += "  (by !" + render(*s.justification) + ")";
  return out;
}

void print_trace(std::ostream& out, const std::string& title, const Trace& t) {
  out << title << " (" << t.size() << (t.size() == 1 ? " step" : " steps") << ")\n";
  for (const auto& s : t) out << "  " << step_text(s) << "\n";
}

Json distinguisher_json(const Distinguisher& d) {
  Json moves = Json::array();
  for (const auto& m : d.moves) {
    Json j;
    j["side"] = m.side == Side::left ? "left" : "right";
    j["label"] = render(m.label);
    j["attacker"] = render(m.attacker);
    j["defender"] = m.defender ? Json(render(*m.defender)) : Json(nullptr);
    moves.push_back(std::move(j));
  }
  Json j;
  j["depth"] = d.depth();
  j["moves"] = std::move(moves);
  return j;
}

void print_distinguisher(std::ostream& out, const Distinguisher& d) {
  out << "distinguisher (depth " << d.depth() << "):\n";
  std::size_t round = 1;
  for (const auto& m : d.moves) {
    const char* attacker = m.side == Side::left ? "left" : "right";
    const char* defender = m.side == Side::left ? "right" : "left";
    out << "  " << round++ << ". " << attacker << " " << render(m.label) << " → "
        << render(m.attacker) << "; ";
    if (m.defender) {
      out << defender << " answers " << render(*m.defender) << "\n";
    } else {
      out << defender << " cannot answer\n";
    }
  }
}

// Front-end failures all map to the usage status.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.position() << ")\n";
  } catch (const DepthExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace

int cmd_check(const std::string& p_text, const std::string& q_text, const CliConfig& cfg,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Process p = parse(p_text, cfg.mode);
    const Process q = parse(q_text, cfg.mode);
    if (cfg.oracle_depth > kDefaultDepthCap) throw DepthExceeded(cfg.oracle_depth, kDefaultDepthCap);
    const Conversion conv = convert(p, q);

    // The game is always played for a non-bisimilar verdict so that a
    // witness can be shown; --oracle also plays it for bisimilar pairs.
    std::optional<GameResult> game;
    if (cfg.oracle || !conv.convertible) {
      game = bounded_bisim(p, q, {cfg.oracle_depth, cfg.mode, kDefaultDepthCap});
    }
    const bool agrees = !game || !(conv.convertible && !game->equivalent);

    if (cfg.format == Format::json) {
      Json j;
      j["verdict"] = conv.convertible ? "bisimilar" : "not bisimilar";
      j["bisimilar"] = conv.convertible;
      j["mode"] = mode_name(cfg.mode);
      j["left"] = render(p);
      j["right"] = render(q);
      j["seed"] = conv.witness ? Json(render(conv.witness->process())) : Json(nullptr);
      j["left_seed"] = render(conv.left.seed.process());
      j["right_seed"] = render(conv.right.seed.process());
      if (game) {
        Json o;
        o["depth"] = cfg.oracle_depth;
        o["result"] = game->equivalent ? "equivalent" : "distinguished";
        o["agrees"] = agrees;
        o["distinguisher"] =
            game->distinguisher ? distinguisher_json(*game->distinguisher) : Json(nullptr);
        j["oracle"] = std::move(o);
      } else {
        j["oracle"] = nullptr;
      }
      if (cfg.trace) {
        j["traces"] = {{"left", trace_json(conv.left.trace)},
                       {"right", trace_json(conv.right.trace)}};
      }
      out << j.dump(2) << "\n";
    } else {
      out << (conv.convertible ? "bisimilar" : "not bisimilar") << "\n";
      if (conv.witness) {
        out << "seed: " << render(conv.witness->process()) << "\n";
      } else {
        out << "left seed: " << render(conv.left.seed.process()) << "\n";
        out << "right seed: " << render(conv.right.seed.process()) << "\n";
      }
      if (cfg.trace) {
        print_trace(out, "left trace", conv.left.trace);
        print_trace(out, "right trace", conv.right.trace);
      }
      if (game) {
        if (game->distinguisher) {
          print_distinguisher(out, *game->distinguisher);
        } else if (!conv.convertible) {
          out << "no distinguisher within depth " << cfg.oracle_depth << "\n";
        }
        if (cfg.oracle) {
          out << "oracle (depth " << cfg.oracle_depth << "): "
              << (game->equivalent ? "equivalent" : "distinguished") << ", "
              << (agrees ? "agrees" : "DISAGREES") << "\n";
        }
      }
    }
    return conv.convertible ? kBisimilar : kNotBisimilar;
  });
}

int cmd_seed(const std::string& text, const CliConfig& cfg, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Process p = parse(text, cfg.mode);
    const SeedResult r = compute_seed(p);
    if (cfg.format == Format::json) {
      Json j;
      j["input"] = render(p);
      j["seed"] = render(r.seed.process());
      j["size"] = size(r.seed.process());
      if (cfg.trace) j["trace"] = trace_json(r.trace);
      out << j.dump(2) << "\n";
    } else {
      out << render(r.seed.process()) << "\n";
      if (cfg.trace) print_trace(out, "trace", r.trace);
    }
    return kOk;
  });
}

int cmd_normalize(const std::string& text, const CliConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const Process p = parse(text, cfg.mode);
    const std::string nf = render(canonicalize(p).process());
    if (cfg.format == Format::json) {
      Json j;
      j["input"] = render(p);
      j["normal_form"] = nf;
      out << j.dump(2) << "\n";
    } else {
      out << nf << "\n";
    }
    return kOk;
  });
}

int cmd_lts(const std::string& text, const CliConfig& cfg, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const Process p = parse(text, cfg.mode);
    if (cfg.lts_depth == 0) throw std::invalid_argument("--depth must be at least 1");
    if (cfg.lts_depth > kDefaultDepthCap) throw DepthExceeded(cfg.lts_depth, kDefaultDepthCap);
    // States whose outgoing transitions lie within the requested depth,
    // the start state first.
    auto states = reachable_within(p, cfg.lts_depth - 1, cfg.mode);
    const CanonicalProcess start = canonicalize(p);
    std::stable_partition(states.begin(), states.end(),
                          [&](const CanonicalProcess& s) { return s == start; });
    if (cfg.format == Format::json) {
      Json js = Json::array();
      for (const auto& s : states) {
        Json ts = Json::array();
        for (const auto& succ : successors(s, cfg.mode)) {
          ts.push_back({{"label", render(succ.label)}, {"destination", render(succ.destination)}});
        }
        js.push_back({{"process", render(s.process())}, {"transitions", std::move(ts)}});
      }
      Json j;
      j["process"] = render(p);
      j["mode"] = mode_name(cfg.mode);
      j["depth"] = cfg.lts_depth;
      j["states"] = std::move(js);
      out << j.dump(2) << "\n";
    } else {
      const bool headers = cfg.lts_depth > 1;
      for (const auto& s : states) {
        if (headers) out << render(s.process()) << "\n";
        for (const auto& succ : successors(s, cfg.mode)) {
          out << (headers ? "  " : "") << render(succ.label) << " → "
              << render(succ.destination) << "\n";
        }
      }
    }
    return kOk;
  });
}

int cmd_fuzz(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.max_size > kMaxCorpusSize) {
      throw std::invalid_argument("--max-size must be at most " + std::to_string(kMaxCorpusSize));
    }
    if (cfg.oracle_depth > kDefaultDepthCap) throw DepthExceeded(cfg.oracle_depth, kDefaultDepthCap);
    SuiteConfig sc;
    sc.seed = cfg.random_seed;
    sc.mode = cfg.mode;
    sc.max_size = cfg.max_size;
    sc.alphabet = cfg.alphabet;
    sc.random_count = cfg.samples;
    sc.random_max_size = kMaxCorpusSize;
    sc.depth = cfg.oracle_depth;
    sc.law_instances = cfg.samples;
    sc.substitution_pairs = cfg.samples;
    const SuiteReport report = lemma_suite(sc);

    if (cfg.format == Format::json) {
      Json props = Json::array();
      for (const auto& p : report.properties) {
        Json ces = Json::array();
        for (const auto& c : p.counterexamples) {
          ces.push_back({{"description", c.description}, {"terms", c.terms}});
        }
        Json notes = Json::object();
        for (const auto& [k, v] : p.notes) notes[k] = v;
        Json j;
        j["name"] = p.name;
        j["instances"] = p.instances;
        j["hypothesis_hits"] = p.hypothesis_hits;
        j["violations"] = p.violations;
        j["counterexamples"] = std::move(ces);
        j["notes"] = std::move(notes);
        props.push_back(std::move(j));
      }
      Json j;
      j["seed"] = cfg.random_seed;
      j["max_size"] = cfg.max_size;
      j["alphabet"] = cfg.alphabet;
      j["mode"] = mode_name(cfg.mode);
      j["properties"] = std::move(props);
      j["passed"] = report.passed();
      out << j.dump(2) << "\n";
    } else {
      for (const auto& p : report.properties) {
        out << (p.passed() ? "PASS " : "FAIL ") << p.name << ": " << p.instances
            << " instances, " << p.hypothesis_hits << " hypothesis hits, " << p.violations
            << " violations";
        for (const auto& [k, v] : p.notes) out << "; " << k << ": " << v;
        out << "\n";
        for (const auto& c : p.counterexamples) {
          out << "  " << c.description << ":";
          for (const auto& t : c.terms) out << " [" << t << "]";
          out << "\n";
        }
      }
      out << (report.passed() ? "passed" : "failed") << "\n";
    }
    return report.passed() ? kOk : kNotBisimilar;
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Strong bisimilarity for CCS with top-level replication", "ccs"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  bool sync = false;
  bool json = false;
  app.add_flag("--sync", sync, "Use input/output polarities and synchronisation");
  app.add_flag("--json", json, "Write machine-readable JSON");
  app.add_flag("--oracle", cfg.oracle, "Cross-check with the bounded bisimulation game");
  app.add_option("--oracle-depth", cfg.oracle_depth, "Rounds of the bounded game")
      ->check(CLI::Range(std::size_t{1}, kDefaultDepthCap));
  app.add_flag("--trace", cfg.trace, "Show the rewrite steps to each seed");
  app.add_option("--seed", cfg.random_seed, "Random seed for fuzz");
  app.add_option("--max-size", cfg.max_size, "Exhaustive corpus bound for fuzz")
      ->check(CLI::Range(std::size_t{0}, kMaxCorpusSize));
  app.add_option("--alphabet", cfg.alphabet, "Number of corpus actions for fuzz")
      ->check(CLI::Range(1, 8));

  std::string left, right, term;
  auto* check = app.add_subcommand("check", "Decide bisimilarity of two processes");
  check->add_option("p", left, "First process, or - for stdin")->required();
  check->add_option("q", right, "Second process, or - for stdin")->required();
  auto* seed = app.add_subcommand("seed", "Print the seed of a process");
  seed->add_option("p", term, "Process, or - for stdin")->required();
  auto* normalize = app.add_subcommand("normalize", "Print the canonical form");
  normalize->add_option("p", term, "Process, or - for stdin")->required();
  auto* lts = app.add_subcommand("lts", "Print transitions");
  lts->add_option("p", term, "Process, or - for stdin")->required();
  lts->add_option("--depth", cfg.lts_depth, "Exploration depth")
      ->check(CLI::Range(std::size_t{1}, kDefaultDepthCap));
  auto* fuzz = app.add_subcommand("fuzz", "Run the property suites");
  fuzz->add_option("--samples", cfg.samples, "Random instances per randomised property");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.mode = sync ? Mode::sync : Mode::base;
  cfg.format = json ? Format::json : Format::text;

  auto resolve = [&](std::string& s) {
    if (s != "-") return true;
    if (!std::getline(in, s)) {
      err << "error: expected a process on standard input\n";
      return false;
    }
    return true;
  };

  if (*check) {
    if (!resolve(left) || !resolve(right)) return kUsage;
    return cmd_check(left, right, cfg, out, err);
  }
  if (*fuzz) return cmd_fuzz(cfg, out, err);
  if (!resolve(term)) return kUsage;
  if (*seed) return cmd_seed(term, cfg, out, err);
  if (*normalize) return cmd_normalize(term, cfg, out, err);
  return cmd_lts(term, cfg, out, err);
}

}  // namespace ccs::cli
