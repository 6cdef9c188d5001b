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

#include "ccs/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace ccs {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool are_coactions(const Action& a, const Action& b) {
  return a.name == b.name &&
         ((a.polarity == Polarity::input && b.polarity == Polarity::output) ||
          (a.polarity == Polarity::output && b.polarity == Polarity::input));
}

// -- FiniteProcess / PrefixedTerm ---------------------------------------------

FiniteProcess::FiniteProcess(std::vector<PrefixedTerm> components)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
  finish();
}

FiniteProcess::FiniteProcess(Sorted, std::vector<PrefixedTerm> components)
    : components_(std::move(components)) {
  finish();
}

void FiniteProcess::finish() {
  size_ = 0;
  hash_ = kEmptyHash;
  for (const auto& c : components_) {
    size_ += c.size();
    hash_ = mix(hash_, c.hash());
  }
}

FiniteProcess FiniteProcess::merged(const FiniteProcess& other) const {
  if (other.empty()) return *this;
  if (empty()) return other;
  std::vector<PrefixedTerm> out;
  out.reserve(components_.size() + other.components_.size());
  std::merge(components_.begin(), components_.end(), other.components_.begin(),
             other.components_.end(), std::back_inserter(out));
  return FiniteProcess(Sorted{}, std::move(out));
}

FiniteProcess from_sorted(std::vector<PrefixedTerm> components) {
  return FiniteProcess(FiniteProcess::Sorted{}, std::move(components));
}

PrefixedTerm::PrefixedTerm(Action head, FiniteProcess body)
    : head_(std::move(head)), body_(std::move(body)) {
  hash_ = mix(std::hash<std::string>{}(head_.name),
              static_cast<std::size_t>(head_.polarity));
  hash_ = mix(hash_, body_.hash());
}

std::strong_ordering compare(const PrefixedTerm& a, const PrefixedTerm& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.head() <=> b.head(); c != 0) return c;
  return compare(a.body(), b.body());
}

std::strong_ordering compare(const FiniteProcess& a, const FiniteProcess& b) {
  const auto& x = a.components();
  const auto& y = b.components();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(x[i], y[i]); c != 0) return c;
  }
  return x.size() <=> y.size();
}

// -- Process ------------------------------------------------------------------

Process::Process(FiniteProcess finite) : finite_(std::move(finite)) {}

Process::Process(std::vector<PrefixedTerm> replicated, FiniteProcess finite)
    : replicated_(std::move(replicated)), finite_(std::move(finite)) {
  std::sort(replicated_.begin(), replicated_.end());
}

std::size_t Process::hash() const {
  std::size_t h = finite_.hash();
  for (const auto& r : replicated_) h = mix(h, r.hash() * 31 + 7);
  return h;
}

Process Process::operator|(const Process& other) const {
  std::vector<PrefixedTerm> reps = replicated_;
  reps.insert(reps.end(), other.replicated_.begin(), other.replicated_.end());
  return Process(std::move(reps), finite_.merged(other.finite_));
}

std::strong_ordering compare(const Process& a, const Process& b) {
  const auto& x = a.replicated();
  const auto& y = b.replicated();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(x[i], y[i]); c != 0) return c;
  }
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  return compare(a.finite(), b.finite());
}

PrefixedTerm prefix(Action head, FiniteProcess body) {
  return PrefixedTerm(std::move(head), std::move(body));
}

FiniteProcess par(std::vector<PrefixedTerm> components) {
  return FiniteProcess(std::move(components));
}

Process bang(const PrefixedTerm& term) { return Process({term}, {}); }

// -- parser -------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  Process parse_top() {
    std::vector<PrefixedTerm> reps;
    std::vector<PrefixedTerm> fin;
    parse_parallel(/*top=*/true, reps, fin);
    skip_ws();
    if (pos_ != text_.size()) syntax("unexpected '" + std::string(1, text_[pos_]) + "'");
    return Process(std::move(reps), FiniteProcess(std::move(fin)));
  }

 private:
  void parse_parallel(bool top, std::vector<PrefixedTerm>& reps,
                      std::vector<PrefixedTerm>& fin) {
    parse_term(top, reps, fin);
    while (accept('|')) parse_term(top, reps, fin);
  }

  void parse_term(bool top, std::vector<PrefixedTerm>& reps,
                  std::vector<PrefixedTerm>& fin) {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('!')) {
      if (!top) structure("replication is only allowed at top level", start);
      skip_ws();
      if (peek() == '!') structure("nested replication is not allowed", pos_);
      if (peek() == '0' || peek() == '(') {
        structure("replication applies only to prefixed terms", pos_);
      }
      reps.push_back(parse_prefixed());
      return;
    }
    if (accept('0')) return;
    if (accept('(')) {
      parse_parallel(top, reps, fin);
      expect(')');
      return;
    }
    fin.push_back(parse_prefixed());
  }

  PrefixedTerm parse_prefixed() {
    Action head = parse_action();
    expect('.');
    return PrefixedTerm(std::move(head), parse_atom());
  }

  FiniteProcess parse_atom() {
    skip_ws();
    if (accept('0')) return {};
    if (accept('(')) {
      std::vector<PrefixedTerm> reps;
      std::vector<PrefixedTerm> fin;
      parse_parallel(/*top=*/false, reps, fin);
      expect(')');
      return FiniteProcess(std::move(fin));
    }
    if (peek() == '!') structure("replication is only allowed at top level", pos_);
    std::vector<PrefixedTerm> one;
    one.push_back(parse_prefixed());
    return from_sorted(std::move(one));
  }

  Action parse_action() {
    skip_ws();
    const std::size_t start = pos_;
    Polarity polarity = mode_ == Mode::sync ? Polarity::input : Polarity::plain;
    if (accept('~')) {
      if (mode_ != Mode::sync) structure("co-actions '~' require sync mode", start);
      polarity = Polarity::output;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      syntax(pos_ >= text_.size() ? "unexpected end of input, expected an action"
                                  : "expected an action name");
    }
    const std::size_t name_start = pos_;
    while (pos_ < text_.size()) {
      const auto ch = static_cast<unsigned char>(text_[pos_]);
      if (!(std::islower(ch) || std::isdigit(ch) || ch == '_')) break;
      ++pos_;
    }
    std::string name(text_.substr(name_start, pos_ - name_start));
    if (mode_ == Mode::sync && name == "tau") {
      structure("tau prefixes are not part of the calculus", name_start);
    }
    return {std::move(name), polarity};
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c || pos_ >= text_.size()) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) {
        syntax(std::string("unexpected end of input, expected '") + c + "'");
      }
      syntax(std::string("expected '") + c + "'");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void syntax(const std::string& msg) {
    throw SyntaxError("syntax error at " + std::to_string(pos_) + ": " + msg, pos_);
  }
  [[noreturn]] void structure(const std::string& constraint, std::size_t at) {
    throw StructureError(constraint, at);
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

Process parse(std::string_view text, Mode mode) { return Parser(text, mode).parse_top(); }

FiniteProcess parse_finite(std::string_view text, Mode mode) {
  Process p = parse(text, mode);
  if (!p.is_finite()) throw StructureError("expected a finite process", 0);
  return p.finite();
}

// -- printer ------------------------------------------------------------------

std::string render(const Action& a) {
  return a.polarity == Polarity::output ? "~" + a.name : a.name;
}

namespace {

void render_into(std::string& out, const PrefixedTerm& t);

void render_atom(std::string& out, const FiniteProcess& body) {
  const auto& cs = body.components();
  if (cs.empty()) {
    out += '0';
  } else if (cs.size() == 1) {
    render_into(out, cs.front());
  } else {
    out += '(';
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += " | ";
      render_into(out, cs[i]);
    }
    out += ')';
  }
}

void render_into(std::string& out, const PrefixedTerm& t) {
  out += render(t.head());
  out += '.';
  render_atom(out, t.body());
}

}  // namespace

std::string render(const PrefixedTerm& t) {
  std::string out;
  render_into(out, t);
  return out;
}

std::string render(const FiniteProcess& f) { return render(Process(f)); }

std::string render(const Process& p) {
  if (p.is_nil()) return "0";
  std::string out;
  bool first = true;
  for (const auto& r : p.replicated()) {
    if (!first) out += " | ";
    first = false;
    out += '!';
    render_into(out, r);
  }
  for (const auto& c : p.finite().components()) {
    if (!first) out += " | ";
    first = false;
    render_into(out, c);
  }
  return out;
}

// -- measures -----------------------------------------------------------------

std::size_t size(const Process& p) {
  std::size_t n = p.finite().size();
  for (const auto& r : p.replicated()) n += r.size();
  return n;
}

namespace {

void collect(const FiniteProcess& f, std::set<Action>& out);

void collect(const PrefixedTerm& t, std::set<Action>& out) {
  out.insert(t.head());
  collect(t.body(), out);
}

void collect(const FiniteProcess& f, std::set<Action>& out) {
  for (const auto& c : f.components()) collect(c, out);
}

PrefixedTerm rename(const PrefixedTerm& t, const Substitution& sigma) {
  Action head = t.head();
  if (auto it = sigma.find(head.name); it != sigma.end()) head.name = it->second;
  return PrefixedTerm(std::move(head), apply_substitution(t.body(), sigma));
}

}  // namespace

std::set<Action> alphabet(const Process& p) {
  std::set<Action> out;
  for (const auto& r : p.replicated()) collect(r, out);
  collect(p.finite(), out);
  return out;
}

std::set<std::string> names(const Process& p) {
  std::set<std::string> out;
  for (const auto& a : alphabet(p)) out.insert(a.name);
  return out;
}

FiniteProcess apply_substitution(const FiniteProcess& f, const Substitution& sigma) {
  std::vector<PrefixedTerm> cs;
  cs.reserve(f.components().size());
  for (const auto& c : f.components()) cs.push_back(rename(c, sigma));
  return FiniteProcess(std::move(cs));
}

Process apply_substitution(const Process& p, const Substitution& sigma) {
  std::vector<PrefixedTerm> reps;
  reps.reserve(p.replicated().size());
  for (const auto& r : p.replicated()) reps.push_back(rename(r, sigma));
  return Process(std::move(reps), apply_substitution(p.finite(), sigma));
}

}  // namespace ccs
