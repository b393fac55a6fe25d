// Copyright 2026 The edacsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// edacsc: corpus augmentation, statistics, training schedules, scoring and
// corrector bridging for spelling-correction data.

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "config_file.h"
#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

void SetUpLogging() {
  auto logger = spdlog::stderr_logger_mt("edacsc");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("EDACSC_LOG")) {
    level = spdlog::level::from_str(env);
  }
  spdlog::set_level(level);
}

void PrintError(std::string_view kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  std::cerr << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
            << '\n';
}

// Removes `--config PATH` / `--config=PATH` from args.
std::string ExtractConfigPath(std::vector<std::string>* args) {
  std::string path;
  for (std::size_t i = 0; i < args->size();) {
    const std::string& a = (*args)[i];
    if (a == "--config") {
      if (i + 1 >= args->size()) throw UsageError("--config needs a path");
      path = (*args)[i + 1];
      args->erase(args->begin() + i, args->begin() + i + 2);
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
      args->erase(args->begin() + i);
    } else {
      ++i;
    }
  }
  return path;
}

// Follows leading subcommand names; returns the selected app and its dotted
// path ("augment.split").
CLI::App* SelectedSubcommand(CLI::App* app,
                             const std::vector<std::string>& args,
                             std::string* path) {
  CLI::App* cur = app;
  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') break;
    CLI::App* next = nullptr;
    try {
      next = cur->get_subcommand(a);
    } catch (const CLI::OptionNotFound&) {
      break;
    }
    if (!next) break;
    if (!path->empty()) *path += '.';
    *path += a;
    cur = next;
  }
  return cur;
}

bool HasFlag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends config-file settings as flags; flags given on the command line win.
void ApplyConfig(const std::vector<ConfigEntry>& entries, CLI::App* sub,
                 const std::string& path, std::vector<std::string>* args) {
  const std::vector<std::string> given = *args;
  for (const auto& e : entries) {
    if (!e.section.empty() && e.section != path) continue;
    // Empty strings are the "unset" default of every string option.
    if (e.value.empty()) continue;
    std::string key = e.key;
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    if (sub->get_option_no_throw(flag) == nullptr) {
      if (e.section.empty()) {
        spdlog::debug("config key '{}' does not apply to '{}'", e.key, path);
        continue;
      }
      throw UsageError("config line " + std::to_string(e.line) +
                       ": unknown key '" + e.key + "' for '" + path + "'");
    }
    if (HasFlag(given, flag)) {
      spdlog::warn("config sets {} but the command line also does; flag wins",
                   flag);
      continue;
    }
    args->push_back(flag + "=" + e.value);
  }
}

void WriteSnapshot(const CLI::App* sub, const std::string& section,
                   const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return;
  const std::string path = out_path + ".run.toml";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write run snapshot '" + path + "'");
  out << "# resolved edacsc run configuration\n[" << section << "]\n"
      << sub->config_to_str(true, false);
  if (!out) throw IoError("write error on '" + path + "'");
}

void AddInput(CLI::App* cmd, InputOptions* in) {
  cmd->add_option("--in", in->path, "Input corpus (- for stdin)")->required();
  cmd->add_option("--format", in->format, "Input format: jsonl or tsv");
  cmd->add_flag("--lenient", in->lenient,
                "Skip and count malformed or invalid records");
}

int Main(int argc, char** argv) {
  SetUpLogging();

  CLI::App app{"Spelling-correction corpus augmentation and evaluation"};
  app.require_subcommand(1);
  app.footer(
      "Any subcommand accepts --config FILE: [section] names the subcommand "
      "(e.g. [augment.split]), keys are flag names. Flags override the file.");

  ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a corpus");
  AddInput(validate_cmd, &validate.in);
  validate_cmd
      ->add_option("--max-violations", validate.max_violations,
                   "Violations listed in the report")
      ->capture_default_str();

  auto* augment = app.add_subcommand("augment", "Augment a corpus");
  augment->require_subcommand(1);

  SplitOptions split;
  auto* split_cmd =
      augment->add_subcommand("split", "Split samples at punctuation");
  AddInput(split_cmd, &split.in);
  split_cmd->add_option("--out", split.out, "Output corpus")->required();
  split_cmd->add_option("--out-format", split.out_format);
  split_cmd->add_option("--delims", split.delims_file,
                        "File with one delimiter per line");
  split_cmd->add_option("--min-seg", split.min_seg, "Minimum segment length")
      ->capture_default_str();
  split_cmd
      ->add_option("--keep-error-free", split.keep_error_free,
                   "Emit segments without typos")
      ->capture_default_str();
  split_cmd
      ->add_option("--attach-delimiter", split.attach_delimiter,
                   "Delimiter ends the preceding segment (false drops it)")
      ->capture_default_str();
  split_cmd
      ->add_option("--on-delim-typo", split.on_delim_typo,
                   "Typo inside a delimiter: skip or reject")
      ->check(CLI::IsMember({"skip", "reject"}))
      ->capture_default_str();
  split_cmd->add_option("--provenance", split.provenance,
                        "Write per-record provenance jsonl");
  split_cmd->add_option("--threads", split.threads, "Workers (0 = all cores)")
      ->capture_default_str();

  ReduceOptions reduce;
  auto* reduce_cmd =
      augment->add_subcommand("reduce", "Emit variants with fewer typos");
  AddInput(reduce_cmd, &reduce.in);
  reduce_cmd->add_option("--out", reduce.out, "Output corpus")->required();
  reduce_cmd->add_option("--out-format", reduce.out_format);
  reduce_cmd
      ->add_option("--max-typos", reduce.max_typos,
                   "Most typos kept in a generated variant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  reduce_cmd->add_option("--keep-original", reduce.keep_original)
      ->capture_default_str();
  reduce_cmd->add_option("--max-origin-typos", reduce.max_origin_typos,
                         "Pass samples with more typos through unexpanded");
  reduce_cmd->add_option("--provenance", reduce.provenance,
                         "Write per-record provenance jsonl");
  reduce_cmd->add_option("--threads", reduce.threads, "Workers (0 = all cores)")
      ->capture_default_str();

  MergeOptionsCli merge;
  merge.inputs.resize(2);
  auto* merge_cmd = app.add_subcommand("merge", "Concatenate two corpora");
  merge_cmd->add_option("--in-a", merge.inputs[0], "First corpus")->required();
  merge_cmd->add_option("--in-b", merge.inputs[1], "Second corpus")->required();
  merge_cmd->add_option("--format", merge.format);
  merge_cmd->add_flag("--lenient", merge.lenient);
  merge_cmd->add_option("--out", merge.out, "Output corpus")->required();
  merge_cmd->add_option("--out-format", merge.out_format);
  merge_cmd->add_flag("--dedup", merge.dedup,
                      "Drop repeated (source, target) pairs");

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  AddInput(stats_cmd, &stats.in);
  stats_cmd->add_option("--threads", stats.threads, "Workers (0 = all cores)")
      ->capture_default_str();

  ScheduleOptions schedule;
  auto* schedule_cmd =
      app.add_subcommand("schedule", "Write a training schedule manifest");
  schedule_cmd->add_option("--procedure", schedule.procedure, "a-g or custom")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "f", "g", "custom"}));
  schedule_cmd->add_option("--train", schedule.train, "Original training set");
  schedule_cmd->add_option("--short", schedule.short_data, "Split corpus");
  schedule_cmd->add_option("--reduce", schedule.reduce, "Reduced corpus");
  schedule_cmd->add_option("--merge", schedule.merge, "Merged corpus");
  schedule_cmd->add_option("--first", schedule.first, "custom: first stage");
  schedule_cmd->add_option("--second", schedule.second, "custom: second stage");
  schedule_cmd->add_option("--out", schedule.out,
                           "Manifest path (default schedule_<name>.json)");

  CorrectOptions correct;
  auto* correct_cmd =
      app.add_subcommand("correct", "Run an external corrector over a corpus");
  AddInput(correct_cmd, &correct.in);
  correct_cmd->add_option("--out", correct.out, "Prediction jsonl")->required();
  correct_cmd->add_option("--cmd", correct.cmd, "Corrector command line");
  correct_cmd->add_option("--mock-spec", correct.mock_spec,
                          "Use the built-in mock corrector");
  correct_cmd->add_flag("--cic", correct.cic,
                        "Constrained iterative correction");
  correct_cmd->add_option("--max-iters", correct.max_iters)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  correct_cmd->add_option("--window", correct.window, "Adjacency window")
      ->capture_default_str();
  correct_cmd->add_option("--on-nonconvergence", correct.on_nonconvergence)
      ->check(CLI::IsMember({"accept_last", "revert_cycle"}))
      ->capture_default_str();
  correct_cmd->add_option("--trace", correct.trace, "CIC trace jsonl");
  correct_cmd->add_option("--batch-size", correct.batch_size)
      ->capture_default_str();
  correct_cmd->add_option("--timeout", correct.timeout_s, "Seconds per batch")
      ->capture_default_str();
  correct_cmd->add_option("--threads", correct.threads, "Corrector processes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  MockServeOptions mock;
  auto* mock_cmd = app.add_subcommand(
      "mock-corrector", "Serve the mock corrector on stdin/stdout");
  mock_cmd->add_option("--spec", mock.spec, "Mock spec JSON")->required();

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Sentence-level metrics");
  eval_cmd->add_option("--gold", eval.gold, "Gold corpus")->required();
  eval_cmd->add_option("--gold-format", eval.gold_format);
  eval_cmd->add_option("--pred", eval.pred, "Prediction jsonl")->required();
  eval_cmd->add_option("--aux", eval.aux,
                       "File of auxiliary characters whose edits are ignored");
  eval_cmd->add_option("--report-format", eval.report_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "Report path (default stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string section;
  CLI::App* selected = nullptr;
  try {
    const std::string config_path = ExtractConfigPath(&args);
    selected = SelectedSubcommand(&app, args, &section);
    if (!config_path.empty()) {
      ApplyConfig(LoadConfig(config_path), selected, section, &args);
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError("usage", e.what());
    return static_cast<int>(ErrorKind::kUsage);
  }

  if (schedule_cmd->parsed() && schedule.out.empty()) {
    schedule.out = "schedule_" + schedule.procedure + ".json";
  }

  if (validate_cmd->parsed()) return RunValidate(validate);
  if (split_cmd->parsed()) {
    WriteSnapshot(split_cmd, section, split.out);
    return RunSplit(split);
  }
  if (reduce_cmd->parsed()) {
    WriteSnapshot(reduce_cmd, section, reduce.out);
    return RunReduce(reduce);
  }
  if (merge_cmd->parsed()) {
    WriteSnapshot(merge_cmd, section, merge.out);
    return RunMerge(merge);
  }
  if (stats_cmd->parsed()) return RunStats(stats);
  if (schedule_cmd->parsed()) {
    WriteSnapshot(schedule_cmd, section, schedule.out);
    return RunSchedule(schedule);
  }
  if (correct_cmd->parsed()) {
    WriteSnapshot(correct_cmd, section, correct.out);
    return RunCorrect(correct);
  }
  if (mock_cmd->parsed()) return RunMockCorrector(mock);
  if (eval_cmd->parsed()) {
    WriteSnapshot(eval_cmd, section, eval.out);
    return RunEval(eval);
  }
  throw UsageError("no subcommand");
}

}  // namespace
}  // namespace edacsc

int main(int argc, char** argv) {
  try {
    return edacsc::Main(argc, argv);
  } catch (const edacsc::Error& e) {
    edacsc::PrintError(edacsc::ErrorKindName(e.kind()), e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    edacsc::PrintError("internal", e.what());
    return 1;
  }
}
