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

#include "edacsc/evaluator.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double Ratio(std::size_t num, std::size_t den, const char* name,
             std::vector<std::string>* degenerate) {
  if (den == 0) {
    degenerate->push_back(name);
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

ordered_json LevelJson(const LevelMetrics& m) {
  ordered_json j;
  j["acc"] = m.acc;
  j["prec"] = m.prec;
  j["rec"] = m.rec;
  j["f1"] = m.f1;
  return j;
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'　' ||
         c == U'﻿';
}

}  // namespace

void EvalCounts::Add(const EvalCounts& o) {
  n += o.n;
  n_gold_err += o.n_gold_err;
  n_clean += o.n_clean;
  n_pred_changed += o.n_pred_changed;
  det_exact += o.det_exact;
  cor_exact += o.cor_exact;
  det_hits += o.det_hits;
  cor_hits += o.cor_hits;
  fp_on_clean += o.fp_on_clean;
}

EvalCounts ClassifySentence(const EvalInput& input) {
  const std::size_t len = input.source.size();
  if (input.gold.size() != len || input.prediction.size() != len) {
    throw ValidationError(
        "sentence '" + input.id + "': length mismatch (source " +
        std::to_string(len) + ", gold " + std::to_string(input.gold.size()) +
        ", prediction " + std::to_string(input.prediction.size()) + ")");
  }
  bool any_gold = false;
  bool any_pred = false;
  bool same_positions = true;
  for (std::size_t j = 0; j < len; ++j) {
    const bool g = input.source[j] != input.gold[j];
    const bool e = input.source[j] != input.prediction[j];
    any_gold |= g;
    any_pred |= e;
    same_positions &= g == e;
  }
  const bool exact = input.prediction == input.gold;

  EvalCounts c;
  c.n = 1;
  c.n_gold_err = any_gold;
  c.n_clean = !any_gold;
  c.n_pred_changed = any_pred;
  c.det_exact = same_positions;
  c.cor_exact = exact;
  c.det_hits = any_pred && same_positions;
  c.cor_hits = any_pred && exact;
  c.fp_on_clean = !any_gold && any_pred;
  return c;
}

double F1(double prec, double rec) {
  return prec + rec == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
}

EvalReport Finalize(const EvalCounts& c) {
  EvalReport r;
  r.counts = c;
  auto* deg = &r.degenerate_metrics;
  r.detection.acc = Ratio(c.det_exact, c.n, "detection.acc", deg);
  r.detection.prec = Ratio(c.det_hits, c.n_pred_changed, "detection.prec", deg);
  r.detection.rec = Ratio(c.det_hits, c.n_gold_err, "detection.rec", deg);
  r.detection.f1 = F1(r.detection.prec, r.detection.rec);
  r.correction.acc = Ratio(c.cor_exact, c.n, "correction.acc", deg);
  r.correction.prec =
      Ratio(c.cor_hits, c.n_pred_changed, "correction.prec", deg);
  r.correction.rec = Ratio(c.cor_hits, c.n_gold_err, "correction.rec", deg);
  r.correction.f1 = F1(r.correction.prec, r.correction.rec);
  r.fpr = Ratio(c.fp_on_clean, c.n_clean, "fpr", deg);
  return r;
}

EvalReport Score(const std::vector<EvalInput>& inputs) {
  EvalCounts total;
  for (const auto& in : inputs) total.Add(ClassifySentence(in));
  return Finalize(total);
}

EvalInput ApplyAuxiliaryFilter(EvalInput input, const CharSet& aux_chars) {
  if (aux_chars.empty()) return input;
  const std::size_t len =
      std::min(input.source.size(), input.prediction.size());
  for (std::size_t j = 0; j < len; ++j) {
    const char32_t s = input.source[j];
    const char32_t p = input.prediction[j];
    if (s != p && (aux_chars.count(s) || aux_chars.count(p))) {
      input.prediction[j] = s;
    }
  }
  return input;
}

std::vector<EvalInput> ApplyAuxiliaryFilter(std::vector<EvalInput> inputs,
                                            const CharSet& aux_chars) {
  for (auto& in : inputs) in = ApplyAuxiliaryFilter(std::move(in), aux_chars);
  return inputs;
}

CharSet LoadCharSet(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  const Text text = DecodeUtf8OrThrow(buf.str(), path);
  CharSet set;
  for (char32_t c : text) {
    if (!IsSpace(c)) set.insert(c);
  }
  return set;
}

std::string FormatPredictionLine(const Prediction& prediction) {
  ordered_json j;
  j["id"] = prediction.id;
  j["prediction"] = EncodeUtf8(prediction.prediction);
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

Prediction ParsePredictionLine(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
      !obj.contains("prediction") || !obj["prediction"].is_string()) {
    throw ValidationError("expected {\"id\": string, \"prediction\": string}");
  }
  return {obj["id"].get<std::string>(),
          DecodeUtf8OrThrow(obj["prediction"].get_ref<const std::string&>(),
                            "\"prediction\"")};
}

std::unordered_map<std::string, Text> ReadPredictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::unordered_map<std::string, Text> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    Prediction p;
    try {
      p = ParsePredictionLine(line);
    } catch (const Error& e) {
      throw ValidationError(path + ":" + std::to_string(line_number) + ": " +
                            e.what());
    }
    if (!out.emplace(p.id, std::move(p.prediction)).second) {
      throw ValidationError(path + ":" + std::to_string(line_number) +
                            ": duplicate prediction id '" + p.id + "'");
    }
  }
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return out;
}

std::vector<EvalInput> AlignPredictions(
    const std::vector<ParallelSample>& gold,
    std::unordered_map<std::string, Text> predictions) {
  std::vector<EvalInput> inputs;
  inputs.reserve(gold.size());
  for (const auto& g : gold) {
    auto it = predictions.find(g.id);
    if (it == predictions.end()) {
      throw ValidationError("no prediction for id '" + g.id + "'");
    }
    EvalInput in{g.id, g.source, g.target, std::move(it->second)};
    predictions.erase(it);
    if (in.gold.size() != in.source.size() ||
        in.prediction.size() != in.source.size()) {
      throw ValidationError("sentence '" + g.id + "': length mismatch");
    }
    inputs.push_back(std::move(in));
  }
  if (!predictions.empty()) {
    throw ValidationError("prediction id '" + predictions.begin()->first +
                          "' has no gold sentence (" +
                          std::to_string(predictions.size()) + " unmatched)");
  }
  return inputs;
}

std::string ReportToJson(const EvalReport& r) {
  ordered_json j;
  j["detection"] = LevelJson(r.detection);
  j["correction"] = LevelJson(r.correction);
  j["fpr"] = r.fpr;
  ordered_json c;
  c["n"] = r.counts.n;
  c["n_gold_err"] = r.counts.n_gold_err;
  c["n_clean"] = r.counts.n_clean;
  c["n_pred_changed"] = r.counts.n_pred_changed;
  c["det_exact"] = r.counts.det_exact;
  c["cor_exact"] = r.counts.cor_exact;
  c["det_hits"] = r.counts.det_hits;
  c["cor_hits"] = r.counts.cor_hits;
  c["fp_on_clean"] = r.counts.fp_on_clean;
  j["counts"] = std::move(c);
  j["degenerate"] = r.degenerate();
  j["degenerate_metrics"] = r.degenerate_metrics;
  return j.dump(2) + "\n";
}

std::string ReportToTable(const EvalReport& r) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-28s | %-28s |\n", "Detection Level",
                "Correction Level");
  out += buf;
  std::snprintf(buf, sizeof(buf), "%7s%7s%7s%7s |%7s%7s%7s%7s |%7s\n", "Acc.",
                "Pre.", "Rec.", "F1", "Acc.", "Pre.", "Rec.", "F1", "FPR");
  out += buf;
  std::snprintf(
      buf, sizeof(buf), "%7.1f%7.1f%7.1f%7.1f |%7.1f%7.1f%7.1f%7.1f |%7.1f\n",
      100 * r.detection.acc, 100 * r.detection.prec, 100 * r.detection.rec,
      100 * r.detection.f1, 100 * r.correction.acc, 100 * r.correction.prec,
      100 * r.correction.rec, 100 * r.correction.f1, 100 * r.fpr);
  out += buf;
  return out;
}

}  // namespace edacsc
