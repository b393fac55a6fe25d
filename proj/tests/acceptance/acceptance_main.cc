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

// Acceptance suite: prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero if any criterion fails.
//
// Criterion 9 reads user-supplied corpora from EDACSC_TRAIN_DATA (required to
// run it) and optionally EDACSC_TRAIN_SHORT_DATA / EDACSC_TRAIN_REDUCE_DATA.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edacsc/cic.h"
#include "edacsc/corpus_io.h"
#include "edacsc/corrector.h"
#include "edacsc/dataset.h"
#include "edacsc/error.h"
#include "edacsc/evaluator.h"
#include "edacsc/mock_corrector.h"
#include "edacsc/process_corrector.h"
#include "edacsc/reduce.h"
#include "edacsc/split.h"
#include "edacsc/stats.h"
#include "test_util.h"

namespace edacsc {
namespace {

using Clock = std::chrono::steady_clock;
namespace t = ::edacsc::testing;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double budget_s;  // 0 = no time bound
  std::function<Outcome()> run;
};

Outcome Fail(const std::string& why) { return {Status::kFail, why}; }

std::vector<ParallelSample> GeneratedCorpus(const std::string& prefix,
                                            std::size_t n,
                                            std::mt19937_64& rng) {
  std::vector<ParallelSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = 1 + rng() % 60;
    out.push_back(
        t::RandomSampleWithTypos(prefix + std::to_string(i), len,
                                 rng() % std::min<std::size_t>(len, 5), rng));
  }
  return out;
}

// 1. stats(merge(a, b)) is the component-wise sum.
Outcome MergeAdditivity() {
  std::mt19937_64 rng(1);
  const auto a = GeneratedCorpus("a", 10000, rng);
  const auto b = GeneratedCorpus("b", 10000, rng);
  const auto m = Merge(a, b);
  const auto sa = ComputeStats(a), sb = ComputeStats(b);
  const auto sm = ComputeStats(m.records);
  if (sm.sentences != sa.sentences + sb.sentences) return Fail("sentences");
  if (sm.errors != sa.errors + sb.errors) return Fail("errors");
  if (!(sm == m.stats)) return Fail("reported stats differ from recount");
  const double weighted =
      (sa.avg_length() * sa.sentences + sb.avg_length() * sb.sentences) /
      static_cast<double>(sa.sentences + sb.sentences);
  if (std::abs(sm.avg_length() - weighted) > 1e-9) return Fail("mean length");

  // Published component and merged rows.
  const std::uint64_t short_n = 724744, short_err = 396192;
  const std::uint64_t reduce_n = 546676, reduce_err = 722783;
  const std::uint64_t merge_n = 1271420, merge_err = 1118975;
  const double short_len = 15.5, reduce_len = 44.3, merge_len = 27.9;
  if (short_n + reduce_n != merge_n) return Fail("published sentence sum");
  if (short_err + reduce_err != merge_err) return Fail("published error sum");
  const double published_mean =
      (short_len * short_n + reduce_len * reduce_n) / merge_n;
  if (std::round(published_mean * 10) / 10 != merge_len) {
    return Fail("published weighted mean " + std::to_string(published_mean));
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "20000 sentences, %llu errors; published mean %.3f",
                static_cast<unsigned long long>(sm.errors), published_mean);
  return {Status::kPass, buf};
}

// 2. Concatenated segments reproduce the origin; errors are conserved and
// every delimiter covering a typo is reported as a suppressed cut.
Outcome SplitReconstruction() {
  std::mt19937_64 rng(2);
  const std::vector<Text> delims = DefaultDelimiters();
  SplitConfig config;
  config.attach_delimiter = true;
  config.min_segment_chars = 0;
  const SplitAugmenter split(config);
  std::size_t passed = 0, total_suppressed = 0;
  const int n = 1000;
  for (int iter = 0; iter < n; ++iter) {
    ParallelSample s{"f" + std::to_string(iter), {}, {}};
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end)
    const std::size_t clauses = 1 + rng() % 6;
    for (std::size_t k = 0; k < clauses; ++k) {
      s.target += t::RandomText(1 + rng() % 8, t::kHanzi, rng);
      if (k + 1 == clauses && rng() % 3 == 0) break;
      const Text& d = delims[rng() % delims.size()];
      spans.push_back({s.target.size(), s.target.size() + d.size()});
      s.target += d;
    }
    s.source = s.target;
    const std::size_t typos = rng() % (1 + s.source.size() / 3);
    for (std::size_t i = 0; i < typos; ++i) {
      s.source[rng() % s.source.size()] = t::Pick(t::kTypoChars, rng);
    }
    std::vector<std::size_t> ends;
    std::size_t suppressed = 0;
    for (auto [b, e] : spans) {
      bool clean = true;
      for (std::size_t j = b; j < e; ++j) clean &= s.source[j] == s.target[j];
      if (clean) {
        ends.push_back(e);
      } else {
        ++suppressed;
      }
    }
    if (ends.empty() || ends.back() != s.target.size()) {
      ends.push_back(s.target.size());
    }

    const auto r = split.Split(s);
    bool ok = !r.rejected && r.suppressed_points == suppressed &&
              r.records.size() == ends.size();
    Text src, tgt;
    std::size_t errors = 0;
    for (std::size_t k = 0; ok && k < r.records.size(); ++k) {
      const auto& seg = r.records[k].sample;
      src += seg.source;
      tgt += seg.target;
      ok &= src.size() == ends[k];
      errors += t::DiffSet(seg.source, seg.target).size();
    }
    ok &= src == s.source && tgt == s.target &&
          errors == t::DiffSet(s.source, s.target).size();
    passed += ok;
    total_suppressed += suppressed;
  }
  const std::string detail = std::to_string(passed) + "/" + std::to_string(n) +
                             " fixtures, " + std::to_string(total_suppressed) +
                             " suppressed cuts";
  return {passed == static_cast<std::size_t>(n) ? Status::kPass : Status::kFail,
          detail};
}

// 3. Record counts equal the brute-force subset enumeration.
Outcome ReduceCountLaw() {
  std::mt19937_64 rng(3);
  std::size_t cases = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t cap = 1; cap <= 3; ++cap) {
      ReduceConfig config;
      config.max_variant_typos = cap;
      const auto s = t::RandomSampleWithTypos("k", 6 + rng() % 20, k, rng);
      const auto records = ReduceSample(s, config);
      const auto want = t::BruteForceVariantCount(k, cap, true);
      if (records.size() != want) {
        return Fail("k=" + std::to_string(k) + " cap=" + std::to_string(cap) +
                    ": " + std::to_string(records.size()) + " vs " +
                    std::to_string(want));
      }
      ++cases;
    }
  }
  const ReduceConfig cap2;
  if (VariantCount(2, cap2) != 3 || VariantCount(3, cap2) != 7 ||
      VariantCount(4, cap2) != 11) {
    return Fail("anchor counts");
  }
  return {Status::kPass, std::to_string(cases) + " (k, cap) pairs"};
}

// 4. The two-typo sentence: three segments with typos (1, 1, 0) and three
// reduce outputs.
Outcome WorkedExample() {
  const ParallelSample s{"ex", U"我门今天去公园，天汽很好，大家都很开心。",
                         U"我们今天去公园，天气很好，大家都很开心。"};
  const auto parts = SplitAugmenter(SplitConfig{}).Split(s);
  std::vector<std::size_t> dist;
  for (const auto& r : parts.records) dist.push_back(CountErrors(r.sample));
  if (dist != std::vector<std::size_t>{1, 1, 0})
    return Fail("split typo counts");
  const auto reduced = ReduceSample(s, ReduceConfig{});
  if (reduced.size() != 3)
    return Fail("reduce produced " + std::to_string(reduced.size()));
  if (CountErrors(reduced[0].sample) != 1 ||
      CountErrors(reduced[1].sample) != 1 || !(reduced[2].sample == s)) {
    return Fail("reduce outputs");
  }
  return {Status::kPass, "split (1,1,0); reduce 1+1+original"};
}

// 5. score() against the direct-definition classifier.
Outcome MetricOracle() {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    const auto corpus = t::RandomEvalCorpus(50, rng);
    const auto r = Score(corpus);
    const auto o = t::BruteForceScore(corpus);
    const double got[9] = {
        r.detection.acc,  r.detection.prec, r.detection.rec,
        r.detection.f1,   r.correction.acc, r.correction.prec,
        r.correction.rec, r.correction.f1,  r.fpr};
    const double want[9] = {o.det_acc, o.det_prec, o.det_rec,
                            o.det_f1,  o.cor_acc,  o.cor_prec,
                            o.cor_rec, o.cor_f1,   o.fpr};
    for (int i = 0; i < 9; ++i) {
      if (got[i] != want[i]) {
        return Fail("corpus " + std::to_string(c) + " ratio " +
                    std::to_string(i));
      }
    }
    if (r.detection.f1 < r.correction.f1) {
      return Fail("corpus " + std::to_string(c) + ": det F1 < cor F1");
    }
  }
  return {Status::kPass, "200 corpora x 9 ratios"};
}

// 6. Measured FPR of the mock tracks its overcorrection rate.
Outcome FprCalibration() {
  const Text pool = U"的地得";
  Text plain;
  for (char32_t c : t::kHanzi) {
    if (pool.find(c) == Text::npos) plain.push_back(c);
  }
  std::mt19937_64 rng(6);
  std::vector<EvalInput> base;
  std::vector<Text> texts;
  for (int i = 0; i < 5000; ++i) {
    Text s = t::RandomText(4 + rng() % 16, plain, rng);
    s[rng() % s.size()] = t::Pick(pool, rng);
    texts.push_back(s);
    base.push_back({std::to_string(i), s, s, s});
  }
  std::string detail;
  bool ok = true;
  for (double p : {0.05, 0.10, 0.20}) {
    MockCorrectorSpec spec;
    spec.overcorrection_rate = p;
    spec.overcorrection_pool = pool;
    spec.seed = 2026;
    MockCorrector mock(spec);
    const auto predictions = CorrectBatch(mock, texts);
    auto inputs = base;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      inputs[i].prediction = predictions[i];
    }
    const double fpr = Score(inputs).fpr;
    ok &= std::abs(fpr - p) <= 0.02;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%sp=%.2f fpr=%.4f",
                  detail.empty() ? "" : ", ", p, fpr);
    detail += buf;
  }
  return {ok ? Status::kPass : Status::kFail, detail};
}

// 7. One fix per pass converges with strictly shrinking gold diffs; an
// oscillating corrector stops at max_iters with a cycle flag.
Outcome CicBehavior() {
  MockCorrectorSpec spec;
  spec.max_substitutions_per_call = 1;
  for (char32_t c : t::kTypoChars) spec.substitutions[c] = U'正';
  MockCorrector one_per_pass(spec);
  std::mt19937_64 rng(7);
  CicConfig config;
  config.max_iters = 3;
  for (int i = 0; i < 500; ++i) {
    auto s = t::RandomSampleWithTypos("c", 3 + rng() % 20, 2, rng);
    for (std::size_t j = 0; j < s.source.size(); ++j) {
      if (s.source[j] != s.target[j]) s.target[j] = U'正';
    }
    const auto r = CicApply(one_per_pass, s.source, config);
    if (r.text != s.target) return Fail("sentence " + std::to_string(i));
    std::size_t prev = t::DiffSet(s.source, s.target).size();
    for (const auto& it : r.trace) {
      const std::size_t now = t::DiffSet(it.text, s.target).size();
      if (prev > 0 ? now >= prev : now != 0) return Fail("non-monotone trace");
      prev = now;
    }
  }
  MockCorrectorSpec swap;
  swap.substitutions[U'甲'] = U'乙';
  swap.substitutions[U'乙'] = U'甲';
  MockCorrector oscillating(swap);
  const auto r = CicApply(oscillating, U"天甲好", config);
  if (r.iterations() != 3 || r.converged || !r.cycle) {
    return Fail("oscillation not flagged");
  }
  config.on_nonconvergence = NonConvergencePolicy::kRevertCycle;
  if (CicApply(oscillating, U"天甲好", config).text != U"天甲好") {
    return Fail("revert_cycle");
  }
  return {Status::kPass, "500 two-typo sentences; cycle flagged at 3"};
}

// 8. Fuzzed round trips through a real child process.
Outcome ProtocolFuzz() {
  const std::string spec_path =
      "/tmp/edacsc_acceptance_spec_" + std::to_string(::getpid()) + ".json";
  std::ofstream(spec_path)
      << R"({"substitutions":{"门":"们","😀":"x"},"seed":3})";
  MockCorrectorSpec local;
  local.substitutions[U'门'] = U'们';
  local.substitutions[U'\U0001F600'] = U'x';

  const Text alphabet = U"a\"\\/\n\r\t\b\f\x01 门们汽😀𝄞é中文，。！？…　\x7f";
  std::mt19937_64 rng(8);
  std::size_t mismatches = 0, sent = 0;
  {
    ProcessCorrector child(std::string(EDACSC_BIN) + " mock-corrector --spec " +
                           spec_path);
    while (sent < 10000) {
      std::vector<CorrectorRequest> batch;
      const std::size_t size = 1 + rng() % 400;
      for (std::size_t i = 0; i < size && sent < 10000; ++i, ++sent) {
        CorrectorRequest r;
        r.id = EncodeUtf8(t::RandomText(rng() % 6, alphabet, rng)) + "#" +
               std::to_string(sent);
        r.text = t::RandomText(rng() % 40, alphabet, rng);
        if (rng() % 50 == 0) r.text.push_back(U'\0');
        batch.push_back(std::move(r));
      }
      const auto got = CorrectMessages(child, batch);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        mismatches += got[i].id != batch[i].id ||
                      got[i].text != RunMock(local, batch[i].text);
      }
    }
  }
  std::remove(spec_path.c_str());
  if (mismatches) return Fail(std::to_string(mismatches) + " mismatches");

  try {
    ProcessCorrector bad(std::string(EDACSC_TEST_HELPER) + " lengthen");
    CorrectBatch(bad, {U"文字"});
    return Fail("length-changing response accepted");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kProtocol) return Fail(e.what());
  }
  return {Status::kPass,
          "10000 messages, 0 mismatches; lengthened reply rejected"};
}

const char* Env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

std::string Describe(const DatasetStats& s) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%llu/%.1f/%llu",
                static_cast<unsigned long long>(s.sentences),
                s.rounded_avg_length(),
                static_cast<unsigned long long>(s.errors));
  return buf;
}

DatasetStats StreamStats(const std::string& path) {
  CorpusReader reader(path, {CorpusFormatForPath(path), false});
  DatasetStats st;
  while (auto s = reader.Next()) st.Add(*s);
  return st;
}

// 9. Full-data counts (optional).
Outcome FullData() {
  const char* train = Env("EDACSC_TRAIN_DATA");
  if (!train) return {Status::kSkip, "EDACSC_TRAIN_DATA not set"};
  const auto samples = ReadCorpus(train, {CorpusFormatForPath(train), false});
  const auto st = ComputeStats(samples);
  std::string detail = "TrainData " + Describe(st);
  const bool exact = st.sentences == 281381 && st.errors == 396222 &&
                     st.rounded_avg_length() == 42.6;

  // Diagnostics only.
  const auto split = SplitCorpus(samples, SplitConfig{});
  detail += "; short " + Describe(split.summary.output) +
            " vs 724744/15.5/396192" + " (suppressed cuts " +
            std::to_string(split.summary.suppressed_points) +
            ", error discrepancy " +
            std::to_string(split.summary.error_discrepancy()) + ")";
  const auto reduce = ReduceCorpus(samples, ReduceConfig{});
  detail +=
      "; reduce " + Describe(reduce.summary.output) + " vs 546676/44.3/722783";
  if (const char* p = Env("EDACSC_TRAIN_SHORT_DATA")) {
    detail += "; supplied short " + Describe(StreamStats(p));
  }
  if (const char* p = Env("EDACSC_TRAIN_REDUCE_DATA")) {
    detail += "; supplied reduce " + Describe(StreamStats(p));
  }
  return {exact ? Status::kPass : Status::kFail, detail};
}

}  // namespace
}  // namespace edacsc

int main() {
  using namespace edacsc;
  const std::vector<Criterion> criteria = {
      {1, "merge additivity", 1.0, MergeAdditivity},
      {2, "split reconstruction", 5.0, SplitReconstruction},
      {3, "reduce count law", 1.0, ReduceCountLaw},
      {4, "worked example", 0.0, WorkedExample},
      {5, "metric oracle equivalence", 5.0, MetricOracle},
      {6, "FPR calibration", 30.0, FprCalibration},
      {7, "CIC behavior", 0.0, CicBehavior},
      {8, "protocol conformance", 10.0, ProtocolFuzz},
      {9, "full-data counts", 0.0, FullData},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (o.status == Status::kPass && c.budget_s > 0 && secs >= c.budget_s) {
      o.status = Status::kFail;
      o.detail += "; over time budget";
    }
    const char* tag = o.status == Status::kPass   ? "PASS"
                      : o.status == Status::kSkip ? "SKIP"
                                                  : "FAIL";
    failures += o.status == Status::kFail;
    char timing[64];
    if (c.budget_s > 0) {
      std::snprintf(timing, sizeof(timing), "%.3fs < %.0fs", secs, c.budget_s);
    } else {
      std::snprintf(timing, sizeof(timing), "%.3fs", secs);
    }
    std::printf("criterion %d %s: %s (%s) [%s]\n", c.number, c.name.c_str(),
                tag, o.detail.c_str(), timing);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
