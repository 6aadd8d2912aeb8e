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

#include "evlogic_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "evlogic/parser.hpp"
#include "evlogic_cli/report.hpp"

namespace evlogic::cli {

ColorMode parse_color_mode(const char* value) {
  if (value == nullptr) return ColorMode::Auto;
  std::string_view v(value);
  if (v == "always") return ColorMode::Always;
  if (v == "never") return ColorMode::Never;
  return ColorMode::Auto;
}

bool use_color(ColorMode mode, bool is_terminal) {
  switch (mode) {
    case ColorMode::Always: return true;
    case ColorMode::Never: return false;
    case ColorMode::Auto: return is_terminal;
  }
  return false;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_line(const std::string& text, bool color) {
  // "file:line:col: error[Kind]: message" with "error" highlighted.
  if (!color) return text;
  auto pos = text.find(": error");
  if (pos == std::string::npos) return text;
  return text.substr(0, pos + 2) + "\x1b[1;31merror\x1b[0m" +
         text.substr(pos + 7);
}

// Parses `path`; on failure writes the errors to `err`.
std::optional<Theory> load(const std::string& path, bool color,
                           std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << error_line(path + ": error[Io]: cannot read file", color) << '\n';
    return std::nullopt;
  }
  ParseResult parsed = parse_theory(*text, path);
  if (!parsed) {
    for (const auto& e : parsed.errors()) {
      err << error_line(to_string(e), color) << '\n';
    }
    return std::nullopt;
  }
  return std::move(parsed).theory();
}

struct FileOutcome {
  int code = kSat;
  std::string out;
  std::string err;
};

FileOutcome run_one(const std::string& path, const RunFlags& flags) {
  FileOutcome result;
  std::ostringstream err;
  auto theory = load(path, flags.color, err);
  result.err = err.str();
  if (!theory) {
    result.code = kInvalid;
    return result;
  }

  auto start = std::chrono::steady_clock::now();
  RunResult run = run_procedure(std::move(*theory));
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();

  RunReport report = make_report(path, run, ms, flags.trace);
  if (flags.json) {
    result.out = to_json(report).dump() + "\n";
  } else {
    result.out = render_text(report, TextStyle{flags.color, flags.plausible});
  }
  result.code = report.sat ? kSat : kUnsat;
  return result;
}

}  // namespace

int cmd_run(const std::vector<std::string>& paths, const RunFlags& flags,
            std::ostream& out, std::ostream& err) {
  std::vector<std::future<FileOutcome>> jobs;
  jobs.reserve(paths.size());
  for (const auto& path : paths) {
    jobs.push_back(std::async(std::launch::async, run_one, path, flags));
  }

  bool invalid = false;
  bool unsat = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    FileOutcome r = jobs[i].get();
    err << r.err;
    if (!flags.json && i != 0 && !r.out.empty()) out << '\n';
    out << r.out;
    invalid |= r.code == kInvalid;
    unsat |= r.code == kUnsat;
  }
  out.flush();
  if (invalid) return kInvalid;
  return unsat ? kUnsat : kSat;
}

int cmd_check(const std::string& path, bool color, std::ostream& out,
              std::ostream& err) {
  auto theory = load(path, color, err);
  if (!theory) return kInvalid;
  std::size_t evidence = 0;
  for (const auto& [key, f] : theory->formulas()) {
    if (layer_of(f) == Layer::Evidence) ++evidence;
  }
  out << path << ": ok (" << theory->agents().size() << " agents, "
      << theory->times().size() << " instants, " << evidence
      << " statements)\n";
  return kSat;
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err) {
  try {
    options.config.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  FuzzSummary summary = fuzz(options);
  out << summary.to_string();
  if (summary.failure && summary.failure->seed) {
    const auto& c = options.config;
    out << "reproduce: evlogic fuzz --seeds 1 --seed " << *summary.failure->seed
        << " --bias " << c.conflict_bias << " --agents " << c.agent_count
        << " --times " << c.time_count << " --simple-vars "
        << c.simple_var_count << " --derived-vars " << c.derived_var_count
        << " --reasonings " << c.reasoning_count << '\n';
  }
  return summary.ok() ? 0 : 1;
}

}  // namespace evlogic::cli
