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

#include "commands.h"

#include <spdlog/spdlog.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "edacsc/cic.h"
#include "edacsc/corpus.h"
#include "edacsc/corpus_io.h"
#include "edacsc/dataset.h"
#include "edacsc/error.h"
#include "edacsc/evaluator.h"
#include "edacsc/mock_corrector.h"
#include "edacsc/parallel.h"
#include "edacsc/process_corrector.h"
#include "edacsc/reduce.h"
#include "edacsc/schedule.h"
#include "edacsc/split.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::ordered_json;

constexpr std::size_t kChunkSize = 8192;

unsigned Threads(unsigned requested) {
  return requested == 0 ? DefaultThreadCount() : requested;
}

ReadOptions ToReadOptions(const InputOptions& in) {
  ReadOptions read;
  read.format = in.format.empty() ? CorpusFormatForPath(in.path)
                                  : ParseCorpusFormat(in.format);
  read.lenient = in.lenient;
  return read;
}

CorpusFormat OutFormat(const std::string& path, const std::string& format) {
  return format.empty() ? CorpusFormatForPath(path) : ParseCorpusFormat(format);
}

// Reads well-formed, valid samples in chunks. In lenient mode invalid samples
// are skipped and counted; otherwise the first one throws.
class SampleStream {
 public:
  explicit SampleStream(const InputOptions& in)
      : reader_(in.path, ToReadOptions(in)), lenient_(in.lenient) {}

  std::vector<ParallelSample> NextChunk(std::size_t max = kChunkSize) {
    std::vector<ParallelSample> chunk;
    while (chunk.size() < max) {
      auto s = reader_.Next();
      if (!s) break;
      if (auto v = CheckSample(*s)) {
        const std::string message = "line " +
                                    std::to_string(reader_.line_number()) +
                                    ": sample '" + s->id + "': " + v->detail;
        if (!lenient_) throw ValidationError(message);
        spdlog::debug("skipping {}", message);
        ++invalid_;
        continue;
      }
      chunk.push_back(*std::move(s));
    }
    return chunk;
  }

  std::size_t skipped() const { return reader_.skipped() + invalid_; }

 private:
  CorpusReader reader_;
  bool lenient_;
  std::size_t invalid_ = 0;
};

ordered_json StatsJson(const DatasetStats& s) {
  ordered_json j;
  j["sentences"] = s.sentences;
  j["avg_length"] = s.rounded_avg_length();
  j["errors"] = s.errors;
  j["chars"] = s.chars;
  j["avg_length_exact"] = s.avg_length();
  j["empty"] = s.empty();
  return j;
}

void PrintJson(const ordered_json& j) {
  std::cout << j.dump(2) << '\n' << std::flush;
}

std::vector<Text> LoadDelimiters(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open delimiter file '" + path + "'");
  std::vector<Text> delims;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    delims.push_back(DecodeUtf8OrThrow(line, path));
  }
  if (delims.empty())
    throw UsageError("delimiter file '" + path + "' is empty");
  return delims;
}

class ProvenanceSink {
 public:
  explicit ProvenanceSink(const std::string& path) {
    if (!path.empty()) out_ = OpenOutput(path);
  }
  void Write(const AugmentedRecord& r) {
    if (out_) *out_ << FormatProvenanceLine(r) << '\n';
  }
  void Close() {
    if (out_) {
      out_->flush();
      if (!*out_) throw IoError("write error on provenance file");
    }
  }

 private:
  std::unique_ptr<std::ostream> out_;
};

}  // namespace

int RunValidate(const ValidateOptions& options) {
  ReadOptions read = ToReadOptions(options.in);
  read.lenient = false;
  std::unique_ptr<std::ifstream> file;
  std::istream* in = &std::cin;
  if (options.in.path != "-") {
    file = std::make_unique<std::ifstream>(options.in.path, std::ios::binary);
    if (!*file) throw IoError("cannot open '" + options.in.path + "'");
    in = file.get();
  }
  CorpusValidator validator(options.max_violations);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(*in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      validator.Add(read.format == CorpusFormat::kJsonl ? ParseJsonlLine(line)
                                                        : ParseTsvLine(line),
                    line_number);
    } catch (const Error& e) {
      validator.AddMalformed(line_number, e.what());
    }
  }
  if (in->bad()) throw IoError("read error on '" + options.in.path + "'");

  const ValidationReport& r = validator.report();
  ordered_json j;
  j["valid"] = r.valid;
  j["invalid"] = r.invalid;
  ordered_json reasons = ordered_json::object();
  for (const auto& [reason, count] : r.by_reason) {
    reasons[std::string(ViolationReasonName(reason))] = count;
  }
  j["by_reason"] = std::move(reasons);
  j["violations"] = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json vj;
    vj["line"] = v.line;
    vj["id"] = v.id;
    vj["reason"] = std::string(ViolationReasonName(v.reason));
    vj["detail"] = v.detail;
    j["violations"].push_back(std::move(vj));
  }
  PrintJson(j);
  return r.invalid == 0 ? 0 : static_cast<int>(ErrorKind::kValidation);
}

int RunSplit(const SplitOptions& options) {
  SplitConfig config;
  if (!options.delims_file.empty()) {
    config.delimiters = LoadDelimiters(options.delims_file);
  }
  config.attach_delimiter = options.attach_delimiter;
  config.min_segment_chars = options.min_seg;
  config.emit_error_free_segments = options.keep_error_free;
  config.on_delimiter_typo = ParseDelimiterTypoPolicy(options.on_delim_typo);
  const SplitAugmenter augmenter(config);

  SampleStream in(options.in);
  CorpusWriter out(options.out, OutFormat(options.out, options.out_format));
  ProvenanceSink provenance(options.provenance);
  SplitSummary summary;
  const unsigned threads = Threads(options.threads);
  while (true) {
    const auto chunk = in.NextChunk();
    if (chunk.empty()) break;
    const auto results = ParallelMap(
        chunk, [&](const ParallelSample& s) { return augmenter.Split(s); },
        threads);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      summary.Add(chunk[i], results[i]);
      for (const auto& r : results[i].records) {
        out.Write(r.sample);
        provenance.Write(r);
      }
    }
  }
  out.Close();
  provenance.Close();

  ordered_json j;
  j["input"] = StatsJson(summary.input);
  j["output"] = StatsJson(summary.output);
  j["suppressed_split_points"] = summary.suppressed_points;
  j["samples_with_suppression"] = summary.samples_with_suppression;
  j["rejected_samples"] = summary.rejected_samples;
  j["error_discrepancy"] = summary.error_discrepancy();
  j["skipped_input"] = in.skipped();
  PrintJson(j);
  return 0;
}

int RunReduce(const ReduceOptions& options) {
  ReduceConfig config;
  config.max_variant_typos = options.max_typos;
  config.keep_original = options.keep_original;
  config.max_origin_typos = options.max_origin_typos;
  CheckReduceConfig(config);

  SampleStream in(options.in);
  CorpusWriter out(options.out, OutFormat(options.out, options.out_format));
  ProvenanceSink provenance(options.provenance);
  ReduceSummary summary;
  const unsigned threads = Threads(options.threads);
  while (true) {
    const auto chunk = in.NextChunk();
    if (chunk.empty()) break;
    const auto results = ParallelMap(
        chunk, [&](const ParallelSample& s) { return ReduceSample(s, config); },
        threads);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      summary.Add(chunk[i], results[i], config);
      for (const auto& r : results[i]) {
        out.Write(r.sample);
        provenance.Write(r);
      }
    }
  }
  out.Close();
  provenance.Close();

  ordered_json j;
  j["input"] = StatsJson(summary.input);
  j["output"] = StatsJson(summary.output);
  j["expanded_samples"] = summary.expanded_samples;
  j["passed_through_cap"] = summary.passed_through_cap;
  j["skipped_input"] = in.skipped();
  PrintJson(j);
  return 0;
}

int RunMerge(const MergeOptionsCli& options) {
  if (options.inputs.size() != 2) {
    throw UsageError("merge takes exactly two input corpora");
  }
  auto read_for = [&](const std::string& path) {
    return ToReadOptions({path, options.format, options.lenient});
  };
  CorpusWriter out(options.out, OutFormat(options.out, options.out_format));
  MergeOptions merge;
  merge.dedup = options.dedup;
  const MergeFileSummary summary =
      MergeFiles(options.inputs[0], read_for(options.inputs[0]),
                 options.inputs[1], read_for(options.inputs[1]), &out, merge);
  out.Close();
  ordered_json j = StatsJson(summary.stats);
  j["namespaced_ids"] = summary.namespaced_ids;
  j["deduplicated"] = summary.deduplicated;
  PrintJson(j);
  return 0;
}

int RunStats(const StatsOptions& options) {
  SampleStream in(options.in);
  DatasetStats total;
  const unsigned threads = Threads(options.threads);
  while (true) {
    const auto chunk = in.NextChunk();
    if (chunk.empty()) break;
    const auto parts = ParallelMap(
        chunk,
        [](const ParallelSample& s) {
          DatasetStats one;
          one.Add(s);
          return one;
        },
        threads);
    for (const auto& p : parts) total.Add(p);
  }
  ordered_json j = StatsJson(total);
  j["skipped_input"] = in.skipped();
  PrintJson(j);
  return 0;
}

int RunSchedule(const ScheduleOptions& options) {
  ScheduleManifest manifest;
  if (options.procedure == "custom") {
    manifest = MakeCustomSchedule(options.first, options.second);
  } else {
    DatasetPaths paths;
    auto set = [](const std::string& v) {
      return v.empty() ? std::nullopt : std::optional<std::string>(v);
    };
    paths.train = set(options.train);
    paths.short_data = set(options.short_data);
    paths.reduce = set(options.reduce);
    paths.merge = set(options.merge);
    manifest = MakeSchedule(options.procedure, paths);
  }
  const std::string path =
      options.out.empty() ? "schedule_" + manifest.name + ".json" : options.out;
  auto out = OpenOutput(path);
  *out << ManifestToJson(manifest);
  out->flush();
  if (!*out) throw IoError("write error on '" + path + "'");
  if (path != "-") spdlog::info("wrote manifest {}", path);
  return 0;
}

int RunCorrect(const CorrectOptions& options) {
  if (options.cmd.empty() == options.mock_spec.empty()) {
    throw UsageError("correct needs exactly one of --cmd or --mock-spec");
  }
  CicConfig cic;
  cic.max_iters = options.cic ? options.max_iters : 1;
  cic.adjacency_window = options.cic ? options.window : 0;
  cic.on_nonconvergence = ParseNonConvergencePolicy(options.on_nonconvergence);
  CheckCicConfig(cic);
  if (options.batch_size == 0) throw UsageError("--batch-size must be >= 1");

  const unsigned workers = std::max(1u, options.threads);
  std::vector<std::unique_ptr<Corrector>> correctors;
  ProcessOptions process;
  process.timeout = std::chrono::milliseconds(
      static_cast<long long>(options.timeout_s * 1000.0));
  for (unsigned w = 0; w < workers; ++w) {
    if (!options.cmd.empty()) {
      correctors.push_back(
          std::make_unique<ProcessCorrector>(options.cmd, process));
    } else {
      correctors.push_back(
          std::make_unique<MockCorrector>(LoadMockSpec(options.mock_spec)));
    }
  }

  SampleStream in(options.in);
  auto out = OpenOutput(options.out);
  std::unique_ptr<std::ostream> trace;
  if (!options.trace.empty()) trace = OpenOutput(options.trace);

  std::size_t sentences = 0;
  std::size_t changed = 0;
  std::size_t cycles = 0;
  std::size_t unconverged = 0;
  while (true) {
    const auto chunk = in.NextChunk(options.batch_size * workers);
    if (chunk.empty()) break;
    // Contiguous slice per worker, each against its own corrector.
    const std::size_t per = (chunk.size() + workers - 1) / workers;
    std::vector<std::vector<CicResult>> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(chunk.size(), w * per);
      const std::size_t end = std::min(chunk.size(), begin + per);
      if (begin == end) continue;
      pool.emplace_back([&, w, begin, end] {
        try {
          std::vector<Text> texts;
          for (std::size_t i = begin; i < end; ++i) {
            texts.push_back(chunk[i].source);
          }
          results[w] = CicApplyBatch(*correctors[w], texts, cic);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    std::size_t i = 0;
    for (const auto& slice : results) {
      for (const auto& r : slice) {
        const ParallelSample& s = chunk[i++];
        *out << FormatPredictionLine({s.id, r.text}) << '\n';
        if (trace) *trace << CicTraceToJson(s.id, r) << '\n';
        ++sentences;
        changed += r.text != s.source;
        cycles += r.cycle;
        unconverged += !r.converged;
      }
    }
  }
  out->flush();
  if (!*out) throw IoError("write error on '" + options.out + "'");
  if (trace) trace->flush();

  ordered_json j;
  j["sentences"] = sentences;
  j["changed"] = changed;
  j["cycles"] = cycles;
  j["unconverged"] = unconverged;
  j["skipped_input"] = in.skipped();
  if (options.out == "-") {
    std::cerr << j.dump() << '\n';
  } else {
    PrintJson(j);
  }
  return 0;
}

int RunMockCorrector(const MockServeOptions& options) {
  MockCorrector mock(LoadMockSpec(options.spec));
  std::ios::sync_with_stdio(false);
  return ServeCorrector(mock, std::cin, std::cout, std::cerr);
}

int RunEval(const EvalOptions& options) {
  if (options.report_format != "json" && options.report_format != "table") {
    throw UsageError("--report-format must be json or table");
  }
  auto predictions = ReadPredictions(options.pred);
  CharSet aux;
  if (!options.aux.empty()) aux = LoadCharSet(options.aux);

  InputOptions gold_in{options.gold, options.gold_format, false};
  SampleStream gold(gold_in);
  EvalCounts counts;
  while (true) {
    auto chunk = gold.NextChunk();
    if (chunk.empty()) break;
    for (auto& g : chunk) {
      auto it = predictions.find(g.id);
      if (it == predictions.end()) {
        throw ValidationError("no prediction for id '" + g.id + "'");
      }
      EvalInput input{g.id, std::move(g.source), std::move(g.target),
                      std::move(it->second)};
      predictions.erase(it);
      counts.Add(ClassifySentence(ApplyAuxiliaryFilter(std::move(input), aux)));
    }
  }
  if (!predictions.empty()) {
    throw ValidationError("prediction id '" + predictions.begin()->first +
                          "' has no gold sentence (" +
                          std::to_string(predictions.size()) + " unmatched)");
  }
  const EvalReport report = Finalize(counts);
  const std::string text = options.report_format == "json"
                               ? ReportToJson(report)
                               : ReportToTable(report);
  auto out = OpenOutput(options.out.empty() ? "-" : options.out);
  *out << text;
  out->flush();
  if (report.degenerate()) {
    spdlog::warn("degenerate metrics (empty denominator) reported as 0");
  }
  return 0;
}

}  // namespace edacsc
