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

#include "edacsc/corpus.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "edacsc/corpus_io.h"
#include "edacsc/error.h"
#include "edacsc/utf8.h"
#include "test_util.h"

namespace edacsc {
namespace {

TEST(Utf8Test, DecodesMixedWidths) {
  const auto t = DecodeUtf8("a\xC3\xA9\xE4\xB8\xAD\xF0\x9F\x98\x80");
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (Text{U'a', U'é', U'中', U'😀'}));
  EXPECT_EQ(EncodeUtf8(*t), "a\xC3\xA9\xE4\xB8\xAD\xF0\x9F\x98\x80");
}

TEST(Utf8Test, RejectsMalformed) {
  EXPECT_FALSE(DecodeUtf8("\xC0\x80"));          // overlong NUL
  EXPECT_FALSE(DecodeUtf8("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(DecodeUtf8("\xF4\x90\x80\x80"));  // > U+10FFFF
  EXPECT_FALSE(DecodeUtf8("\xE4\xB8"));          // truncated
  EXPECT_FALSE(DecodeUtf8("\x80"));
}

TEST(Utf8Test, RoundTripsRandomScalars) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(0, 0x10FFFF);
  for (int iter = 0; iter < 200; ++iter) {
    Text t;
    while (t.size() < 50) {
      const char32_t c = dist(rng);
      if (IsScalarValue(c)) t.push_back(c);
    }
    EXPECT_EQ(DecodeUtf8(EncodeUtf8(t)), t);
  }
}

TEST(DeriveErrorsTest, IdenticalPairHasNoErrors) {
  EXPECT_TRUE(DeriveErrors({"s", U"abc", U"abc"}).empty());
}

TEST(DeriveErrorsTest, ReturnsDifferingPositions) {
  EXPECT_EQ(DeriveErrors({"s", U"aXcYe", U"abcde"}), (ErrorPositions{1, 3}));
}

TEST(DeriveErrorsTest, LengthMismatchNamesSampleAndLengths) {
  try {
    DeriveErrors({"s9", U"ab", U"abc"});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    const std::string what = e.what();
    EXPECT_NE(what.find("s9"), std::string::npos);
    EXPECT_NE(what.find("(2 vs 3)"), std::string::npos);
  }
}

TEST(DeriveErrorsTest, CountMatchesHammingDistance) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t len = 1 + rng() % 40;
    const std::size_t k = rng() % (len + 1);
    const auto s = testing::RandomSampleWithTypos("x", len, k, rng);
    const auto oracle = testing::DiffSet(s.source, s.target);
    const auto errors = DeriveErrors(s);
    EXPECT_EQ(std::set<std::size_t>(errors.begin(), errors.end()), oracle);
    EXPECT_TRUE(std::is_sorted(errors.begin(), errors.end()));
    EXPECT_EQ(CountErrors(s), oracle.size());
    EXPECT_EQ(DeriveErrors(s), errors);
  }
}

TEST(ValidateCorpusTest, AllValid) {
  const auto r = ValidateCorpus(
      {{"a", U"xy", U"xy"}, {"b", U"xz", U"xy"}, {"c", U"q", U"q"}});
  EXPECT_EQ(r.valid, 3u);
  EXPECT_EQ(r.invalid, 0u);
}

TEST(ValidateCorpusTest, FlagsLengthMismatch) {
  const auto r = ValidateCorpus(
      {{"a", U"xy", U"xy"}, {"b", U"x", U"xy"}, {"c", U"q", U"q"}});
  EXPECT_EQ(r.valid, 2u);
  EXPECT_EQ(r.invalid, 1u);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].reason, ViolationReason::kLengthMismatch);
  EXPECT_EQ(r.violations[0].line, 2u);
}

TEST(ValidateCorpusTest, FlagsDuplicateIdAndEmptySentence) {
  const auto r = ValidateCorpus(
      {{"s1", U"a", U"a"}, {"s1", U"b", U"b"}, {"s2", U"", U""}});
  EXPECT_EQ(r.valid, 1u);
  EXPECT_EQ(r.invalid, 2u);
  EXPECT_EQ(r.by_reason.at(ViolationReason::kDuplicateId), 1u);
  EXPECT_EQ(r.by_reason.at(ViolationReason::kEmptySentence), 1u);
}

TEST(ValidateCorpusTest, KeepsOnlyFirstViolations) {
  std::vector<ParallelSample> bad;
  for (int i = 0; i < 50; ++i) {
    bad.push_back({"b" + std::to_string(i), U"a", U"ab"});
  }
  const auto r = ValidateCorpus(bad, 20);
  EXPECT_EQ(r.invalid, 50u);
  EXPECT_EQ(r.violations.size(), 20u);
}

TEST(CorpusIoTest, JsonlRoundTripIsByteExact) {
  std::mt19937_64 rng(3);
  std::vector<ParallelSample> corpus;
  for (int i = 0; i < 100; ++i) {
    corpus.push_back(testing::RandomSampleWithTypos(
        "id-" + std::to_string(i) + "\"\\", 1 + rng() % 30, rng() % 3, rng));
  }
  corpus[5].source = corpus[5].target = U"tab\there \"quoted\" \U0001F600";
  std::ostringstream first;
  {
    CorpusWriter w(&first, CorpusFormat::kJsonl);
    for (const auto& s : corpus) w.Write(s);
    w.Close();
    EXPECT_EQ(w.count(), 100u);
  }
  std::istringstream in(first.str());
  CorpusReader reader(&in, {CorpusFormat::kJsonl, false});
  std::vector<ParallelSample> back;
  while (auto s = reader.Next()) back.push_back(*s);
  EXPECT_EQ(back, corpus);

  std::ostringstream second;
  CorpusWriter w(&second, CorpusFormat::kJsonl);
  for (const auto& s : back) w.Write(s);
  w.Close();
  EXPECT_EQ(second.str(), first.str());
}

TEST(CorpusIoTest, JsonlFieldOrderIsFixed) {
  EXPECT_EQ(FormatJsonlLine({"s1", U"我门", U"我们"}),
            "{\"id\":\"s1\",\"source\":\"我门\",\"target\":\"我们\"}");
}

TEST(CorpusIoTest, TsvLineParsesThreeFields) {
  const auto s = ParseTsvLine("s1\taXc\tabc");
  EXPECT_EQ(s, (ParallelSample{"s1", U"aXc", U"abc"}));
  EXPECT_THROW(ParseTsvLine("s1\tabc"), Error);
  EXPECT_THROW(ParseTsvLine("s1\ta\tb\tc"), Error);
  EXPECT_THROW(FormatTsvLine({"s1", U"a\tb", U"abc"}), Error);
}

TEST(CorpusIoTest, MissingTargetNamesLine) {
  std::istringstream in(
      "{\"id\":\"a\",\"source\":\"x\",\"target\":\"x\"}\n"
      "{\"id\":\"b\",\"source\":\"y\"}\n");
  CorpusReader reader(&in, {CorpusFormat::kJsonl, false});
  ASSERT_TRUE(reader.Next().has_value());
  try {
    reader.Next();
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    const std::string what = e.what();
    EXPECT_NE(what.find(":2:"), std::string::npos) << what;
    EXPECT_NE(what.find("target"), std::string::npos) << what;
  }
}

TEST(CorpusIoTest, RejectsExtraFieldsAndNonStrings) {
  EXPECT_THROW(ParseJsonlLine(R"({"id":"a","source":"x","target":"x","n":1})"),
               Error);
  EXPECT_THROW(ParseJsonlLine(R"({"id":1,"source":"x","target":"x"})"), Error);
  EXPECT_THROW(ParseJsonlLine("[1,2]"), Error);
}

TEST(CorpusIoTest, LenientModeSkipsAndCounts) {
  std::istringstream in(
      "{\"id\":\"a\",\"source\":\"x\",\"target\":\"x\"}\n"
      "not json\n"
      "{\"id\":\"c\",\"source\":\"z\",\"target\":\"z\"}\n");
  CorpusReader reader(&in, {CorpusFormat::kJsonl, true});
  std::vector<std::string> ids;
  while (auto s = reader.Next()) ids.push_back(s->id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(reader.skipped(), 1u);
  ASSERT_EQ(reader.skip_messages().size(), 1u);
  EXPECT_NE(reader.skip_messages()[0].find(":2:"), std::string::npos);
}

TEST(CorpusIoTest, FormatFromPath) {
  EXPECT_EQ(CorpusFormatForPath("x/train.tsv"), CorpusFormat::kTsv);
  EXPECT_EQ(CorpusFormatForPath("train.jsonl"), CorpusFormat::kJsonl);
  EXPECT_THROW(ParseCorpusFormat("csv"), Error);
}

TEST(CorpusIoTest, ProvenanceLines) {
  AugmentedRecord r;
  r.sample.id = "s#r0";
  r.origin_id = "s";
  r.method = AugmentMethod::kReduce;
  r.retained = {1, 4};
  EXPECT_EQ(
      FormatProvenanceLine(r),
      R"({"id":"s#r0","origin_id":"s","method":"reduce","retained":[1,4]})");
  r.method = AugmentMethod::kSplit;
  r.segment_index = 2;
  EXPECT_EQ(FormatProvenanceLine(r),
            R"({"id":"s#r0","origin_id":"s","method":"split","segment":2})");
}

}  // namespace
}  // namespace edacsc
