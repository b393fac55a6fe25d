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

#ifndef EDACSC_EVALUATOR_H_
#define EDACSC_EVALUATOR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "edacsc/corpus.h"
#include "edacsc/utf8.h"

namespace edacsc {

// One evaluated sentence. source, gold and prediction have equal length.
struct EvalInput {
  std::string id;
  Text source;
  Text gold;
  Text prediction;
};

struct EvalCounts {
  std::size_t n = 0;
  std::size_t n_gold_err = 0;      // G != {}
  std::size_t n_clean = 0;         // G == {}
  std::size_t n_pred_changed = 0;  // E != {}
  std::size_t det_exact = 0;       // E == G
  std::size_t cor_exact = 0;       // prediction == gold
  std::size_t det_hits = 0;        // E != {} and E == G
  std::size_t cor_hits = 0;        // E != {} and prediction == gold
  std::size_t fp_on_clean = 0;     // G == {} and E != {}

  void Add(const EvalCounts& other);
};

struct LevelMetrics {
  double acc = 0.0;
  double prec = 0.0;
  double rec = 0.0;
  double f1 = 0.0;
};

// Sentence-level report. G is the set of positions where source differs
// from gold, E where source differs from the prediction. A sentence counts
// as predicted positive when E is non-empty; a detection hit needs E == G,
// a correction hit needs prediction == gold.
struct EvalReport {
  LevelMetrics detection;
  LevelMetrics correction;
  double fpr = 0.0;
  EvalCounts counts;
  // Ratios whose denominator was zero; they are reported as 0.
  std::vector<std::string> degenerate_metrics;
  bool degenerate() const { return !degenerate_metrics.empty(); }
};

// Classifies one sentence. Throws a validation Error on length mismatch.
EvalCounts ClassifySentence(const EvalInput& input);

EvalReport Finalize(const EvalCounts& counts);
EvalReport Score(const std::vector<EvalInput>& inputs);

double F1(double prec, double rec);

using CharSet = std::unordered_set<char32_t>;

// Reverts every predicted edit whose source or predicted character is in
// `aux_chars`.
EvalInput ApplyAuxiliaryFilter(EvalInput input, const CharSet& aux_chars);
std::vector<EvalInput> ApplyAuxiliaryFilter(std::vector<EvalInput> inputs,
                                            const CharSet& aux_chars);

// Every non-whitespace character of a UTF-8 file.
CharSet LoadCharSet(const std::string& path);

// Prediction files are jsonl lines {"id": ..., "prediction": ...}.
struct Prediction {
  std::string id;
  Text prediction;
};

std::string FormatPredictionLine(const Prediction& prediction);
Prediction ParsePredictionLine(std::string_view line);
std::unordered_map<std::string, Text> ReadPredictions(const std::string& path);

// Joins gold samples with predictions by id. Both sides must hold exactly
// the same ids.
std::vector<EvalInput> AlignPredictions(
    const std::vector<ParallelSample>& gold,
    std::unordered_map<std::string, Text> predictions);

std::string ReportToJson(const EvalReport& report);
// Acc/Pre/Rec/F1 at detection then correction level, then FPR, as
// percentages.
std::string ReportToTable(const EvalReport& report);

}  // namespace edacsc

#endif  // EDACSC_EVALUATOR_H_
