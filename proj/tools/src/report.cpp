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

#include "evlogic_cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace evlogic::cli {

namespace {

std::vector<std::string> render_all(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

}  // namespace

RunReport make_report(const std::string& input, const RunResult& result,
                      double duration_ms, bool with_trace) {
  RunReport r;
  r.input = input;
  r.sat = is_open(result.verdict);
  if (const auto* open = std::get_if<Open>(&result.verdict)) {
    for (const auto& f : open->model.facts) {
      (f.lit.positive ? r.positive : r.negative).push_back(to_string(Formula{f}));
    }
    r.plausible = r.positive;
  } else {
    const auto& w = std::get<Closed>(result.verdict).witness;
    r.witness = Witness{std::string(to_string(w.rule)), render_all(w.consumed)};
  }
  if (with_trace) {
    for (const auto& e : result.theory.trace()) {
      r.trace.push_back(TraceLine{e.step, std::string(to_string(e.rule)),
                                  render_all(e.consumed), render_all(e.inserted),
                                  render_all(e.removed)});
    }
  }
  for (const auto& [rule, count] : rule_stats(result.theory)) {
    r.stats.emplace_back(std::string(to_string(rule)), count);
  }
  r.duration_ms = duration_ms;
  return r;
}

nlohmann::ordered_json to_json(const RunReport& r) {
  using json = nlohmann::ordered_json;
  json out;
  out["input"] = r.input;
  out["verdict"] = r.sat ? "sat" : "unsat";
  out["model"] = json{{"positive", r.positive}, {"negative", r.negative}};
  out["plausible"] = r.plausible;
  if (r.witness) {
    out["witness"] =
        json{{"rule", r.witness->rule}, {"consumed", r.witness->consumed}};
  } else {
    out["witness"] = nullptr;
  }
  out["trace"] = json::array();
  for (const auto& t : r.trace) {
    out["trace"].push_back(json{{"step", t.step},
                                {"rule", t.rule},
                                {"consumed", t.consumed},
                                {"inserted", t.inserted},
                                {"removed", t.removed}});
  }
  out["stats"] = json::object();
  for (const auto& [rule, count] : r.stats) out["stats"][rule] = count;
  out["duration_ms"] = r.duration_ms;
  return out;
}

RunReport report_from_json(const nlohmann::ordered_json& j) {
  RunReport r;
  r.input = j.at("input").get<std::string>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "sat" && verdict != "unsat") {
    throw std::invalid_argument("verdict must be \"sat\" or \"unsat\"");
  }
  r.sat = verdict == "sat";
  r.positive = j.at("model").at("positive").get<std::vector<std::string>>();
  r.negative = j.at("model").at("negative").get<std::vector<std::string>>();
  r.plausible = j.at("plausible").get<std::vector<std::string>>();
  const auto& w = j.at("witness");
  if (!w.is_null()) {
    r.witness = Witness{w.at("rule").get<std::string>(),
                        w.at("consumed").get<std::vector<std::string>>()};
  }
  for (const auto& t : j.at("trace")) {
    r.trace.push_back(TraceLine{t.at("step").get<std::size_t>(),
                                t.at("rule").get<std::string>(),
                                t.at("consumed").get<std::vector<std::string>>(),
                                t.at("inserted").get<std::vector<std::string>>(),
                                t.at("removed").get<std::vector<std::string>>()});
  }
  for (const auto& [rule, count] : j.at("stats").items()) {
    r.stats.emplace_back(rule, count.get<std::size_t>());
  }
  r.duration_ms = j.at("duration_ms").get<double>();
  return r;
}

namespace {

std::string paint(const std::string& text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

std::string render_text(const RunReport& r, const TextStyle& style) {
  std::ostringstream out;
  out << r.input << ": "
      << (r.sat ? paint("sat", "32", style.color)
                : paint("unsat", "31", style.color))
      << '\n';

  if (r.sat) {
    out << (style.plausible_only ? "plausible:" : "model:") << '\n';
    for (const auto& f : r.positive) out << "  " << f << '\n';
    if (!style.plausible_only) {
      for (const auto& f : r.negative) {
        out << "  " << f << "  " << paint("(negative)", "2", style.color)
            << '\n';
      }
    }
  } else if (r.witness) {
    out << "closed by " << r.witness->rule << ": " << join(r.witness->consumed)
        << '\n';
  }

  if (!r.trace.empty()) {
    out << "trace:\n";
    for (const auto& t : r.trace) {
      out << "  " << t.step << ". " << t.rule;
      if (!t.consumed.empty()) out << "  from " << join(t.consumed);
      out << '\n';
      if (!t.inserted.empty()) out << "       + " << join(t.inserted) << '\n';
      if (!t.removed.empty()) out << "       - " << join(t.removed) << '\n';
    }
  }

  if (!r.stats.empty()) {
    std::vector<std::string> parts;
    for (const auto& [rule, count] : r.stats) {
      parts.push_back(rule + " " + std::to_string(count));
    }
    out << "rules: " << join(parts) << '\n';
  }
  return out.str();
}

}  // namespace evlogic::cli
