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

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "evlogic_cli/commands.hpp"

#ifndef EVLOGIC_DEFAULT_CORPUS
#define EVLOGIC_DEFAULT_CORPUS ""
#endif

int main(int argc, char** argv) {
  using namespace evlogic;

  CLI::App app{"evlogic: evidence-logic theories to verdicts, models and traces"};
  app.require_subcommand(1);

  const cli::ColorMode color_mode =
      cli::parse_color_mode(std::getenv("EVLOGIC_COLOR"));

  std::vector<std::string> run_files;
  cli::RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Rewrite theories and report the verdict");
  run->add_option("files", run_files, ".el files")->required();
  run->add_flag("--json", run_flags.json, "One JSON report per line");
  run->add_flag("--trace", run_flags.trace, "Include every rule application");
  run->add_flag("--plausible", run_flags.plausible, "Only the positive facts");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Parse and validate a theory");
  check->add_option("file", check_file, ".el file")->required();

  FuzzOptions fuzz;
  fuzz.seeds = 100;
  bool disable_delta = false;
  auto* fz = app.add_subcommand("fuzz", "Check the engine on generated theories");
  fz->add_option("--seeds", fuzz.seeds, "Number of seeds")->capture_default_str();
  fz->add_option("--seed", fuzz.config.seed, "First seed")->capture_default_str();
  fz->add_option("--bias", fuzz.config.conflict_bias, "Conflict bias in [0,1]")
      ->capture_default_str();
  fz->add_option("--agents", fuzz.config.agent_count)->capture_default_str();
  fz->add_option("--times", fuzz.config.time_count)->capture_default_str();
  fz->add_option("--simple-vars", fuzz.config.simple_var_count)->capture_default_str();
  fz->add_option("--derived-vars", fuzz.config.derived_var_count)->capture_default_str();
  fz->add_option("--reasonings", fuzz.config.reasoning_count)->capture_default_str();
  fz->add_option("--orders", fuzz.check.orders, "Shuffled runs per theory")
      ->capture_default_str();
  fz->add_option("--corpus", fuzz.corpus_dir,
                 "Directory with dnc.el and attribution.el");
  fz->add_flag("--disable-delta", disable_delta)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the invalid-input code.
    return app.exit(e) == 0 ? 0 : cli::kInvalid;
  }

  if (*run) {
    run_flags.color = cli::use_color(color_mode, isatty(STDOUT_FILENO) != 0);
    return cli::cmd_run(run_files, run_flags, std::cout, std::cerr);
  }
  if (*check) {
    bool color = cli::use_color(color_mode, isatty(STDERR_FILENO) != 0);
    return cli::cmd_check(check_file, color, std::cout, std::cerr);
  }
  fuzz.check.delta_removal = !disable_delta;
  if (fuzz.corpus_dir.empty() &&
      std::filesystem::is_directory(EVLOGIC_DEFAULT_CORPUS)) {
    fuzz.corpus_dir = EVLOGIC_DEFAULT_CORPUS;
  }
  return cli::cmd_fuzz(fuzz, std::cout, std::cerr);
}
