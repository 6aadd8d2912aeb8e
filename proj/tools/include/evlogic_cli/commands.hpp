// Copyright 2026 The evlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVLOGIC_CLI_COMMANDS_HPP_
#define EVLOGIC_CLI_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "evlogic/oracle.hpp"

namespace evlogic::cli {

enum ExitCode : int { kSat = 0, kUnsat = 1, kInvalid = 2 };

enum class ColorMode { Auto, Always, Never };

/// Reads EVLOGIC_COLOR's value; unknown or missing values mean Auto.
ColorMode parse_color_mode(const char* value);

bool use_color(ColorMode mode, bool is_terminal);

struct RunFlags {
  bool json = false;
  bool trace = false;
  bool plausible = false;
  bool color = false;
};

/// Runs every file (concurrently) and writes the reports in input order:
/// text blocks, or one JSON object per line. Exit code: 2 if any file fails
/// to load, else 1 if any is unsat, else 0.
int cmd_run(const std::vector<std::string>& paths, const RunFlags& flags,
            std::ostream& out, std::ostream& err);

/// Parses and validates only. 0 when valid, 2 otherwise.
int cmd_check(const std::string& path, bool color, std::ostream& out,
              std::ostream& err);

/// 0 when every check passes, 1 otherwise.
int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

}  // namespace evlogic::cli

#endif  // EVLOGIC_CLI_COMMANDS_HPP_
