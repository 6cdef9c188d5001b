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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccs/syntax.hpp"

// Command-line front end. Every verb writes to the given streams and
// returns the process exit status, so the whole surface is testable
// in-process.
namespace ccs::cli {

enum class Format { text, json };

struct CliConfig {
  Mode mode = Mode::base;
  std::size_t oracle_depth = 6;
  bool oracle = false;
  Format format = Format::text;
  bool trace = false;
  std::uint64_t random_seed = 1;
  std::size_t max_size = 4;
  std::size_t alphabet = 2;
  std::size_t samples = 200;
  std::size_t lts_depth = 1;
};

inline constexpr std::size_t kMaxCorpusSize = 8;

enum Exit : int { kBisimilar = 0, kNotBisimilar = 1, kUsage = 2 };
/// Exit status of a successful non-check verb; fuzz uses kNotBisimilar
/// when a counterexample was found.
inline constexpr int kOk = 0;

int cmd_check(const std::string& p, const std::string& q, const CliConfig& cfg,
              std::ostream& out, std::ostream& err);
int cmd_seed(const std::string& p, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_normalize(const std::string& p, const CliConfig& cfg, std::ostream& out,
                  std::ostream& err);
int cmd_lts(const std::string& p, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fuzz(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and
/// dispatches. Term arguments equal to "-" are read line by line from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ccs::cli
