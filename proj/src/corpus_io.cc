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

#include "edacsc/corpus_io.h"

#include <iostream>

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kMaxSkipMessages = 20;

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

const std::string& RequireStringField(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(std::string("missing \"") + key + "\"");
  }
  if (!it->is_string()) {
    throw ValidationError(std::string("\"") + key + "\" is not a string");
  }
  return it->get_ref<const std::string&>();
}

// Wraps a stream that is not owned and must outlive the wrapper.
class NonOwningStream : public std::ostream {
 public:
  explicit NonOwningStream(std::ostream& base) : std::ostream(base.rdbuf()) {}
};

}  // namespace

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "tsv") return CorpusFormat::kTsv;
  throw UsageError("unknown corpus format '" + std::string(name) +
                   "' (expected jsonl or tsv)");
}

CorpusFormat CorpusFormatForPath(std::string_view path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".tsv") {
    return CorpusFormat::kTsv;
  }
  return CorpusFormat::kJsonl;
}

std::string FormatJsonlLine(const ParallelSample& sample) {
  ordered_json j;
  j["id"] = sample.id;
  j["source"] = EncodeUtf8(sample.source);
  j["target"] = EncodeUtf8(sample.target);
  return Dump(j);
}

std::string FormatTsvLine(const ParallelSample& sample) {
  const std::string source = EncodeUtf8(sample.source);
  const std::string target = EncodeUtf8(sample.target);
  for (const std::string* field : {&sample.id, &source, &target}) {
    if (field->find_first_of("\t\n") != std::string::npos) {
      throw ValidationError("sample '" + sample.id +
                            "': tab or newline cannot be written as tsv");
    }
  }
  std::string line = sample.id;
  line += '\t';
  line += source;
  line += '\t';
  line += target;
  return line;
}

ParallelSample ParseJsonlLine(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ValidationError("expected a JSON object");
  ParallelSample sample;
  sample.id = RequireStringField(obj, "id");
  sample.source =
      DecodeUtf8OrThrow(RequireStringField(obj, "source"), "\"source\"");
  sample.target =
      DecodeUtf8OrThrow(RequireStringField(obj, "target"), "\"target\"");
  if (obj.size() != 3) {
    for (const auto& [key, value] : obj.items()) {
      if (key != "id" && key != "source" && key != "target") {
        throw ValidationError("unexpected field \"" + key + "\"");
      }
    }
  }
  return sample;
}

ParallelSample ParseTsvLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto t1 = line.find('\t');
  const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
  if (t2 == std::string_view::npos ||
      line.find('\t', t2 + 1) != std::string_view::npos) {
    throw ValidationError("expected exactly 3 tab-separated fields");
  }
  ParallelSample sample;
  sample.id = std::string(line.substr(0, t1));
  sample.source =
      DecodeUtf8OrThrow(line.substr(t1 + 1, t2 - t1 - 1), "source field");
  sample.target = DecodeUtf8OrThrow(line.substr(t2 + 1), "target field");
  return sample;
}

CorpusReader::CorpusReader(const std::string& path, ReadOptions options)
    : options_(options), path_(path) {
  if (path == "-") {
    in_ = &std::cin;
    return;
  }
  owned_ = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*owned_) throw IoError("cannot open '" + path + "' for reading");
  in_ = owned_.get();
}

CorpusReader::CorpusReader(std::istream* in, ReadOptions options)
    : in_(in), options_(options), path_("<stream>") {}

std::optional<ParallelSample> CorpusReader::Next() {
  while (std::getline(*in_, line_)) {
    ++line_number_;
    if (line_.empty()) continue;
    try {
      return options_.format == CorpusFormat::kJsonl ? ParseJsonlLine(line_)
                                                     : ParseTsvLine(line_);
    } catch (const Error& e) {
      const std::string message =
          path_ + ":" + std::to_string(line_number_) + ": " + e.what();
      if (!options_.lenient) throw ValidationError(message);
      ++skipped_;
      if (skip_messages_.size() < kMaxSkipMessages) {
        skip_messages_.push_back(message);
      }
    }
  }
  if (in_->bad()) throw IoError("read error on '" + path_ + "'");
  return std::nullopt;
}

CorpusWriter::CorpusWriter(const std::string& path, CorpusFormat format)
    : format_(format), path_(path) {
  if (path == "-") {
    out_ = &std::cout;
    return;
  }
  owned_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*owned_) throw IoError("cannot open '" + path + "' for writing");
  out_ = owned_.get();
}

CorpusWriter::CorpusWriter(std::ostream* out, CorpusFormat format)
    : out_(out), format_(format), path_("<stream>") {}

CorpusWriter::~CorpusWriter() {
  if (!closed_) out_->flush();
}

void CorpusWriter::Write(const ParallelSample& sample) {
  *out_ << (format_ == CorpusFormat::kJsonl ? FormatJsonlLine(sample)
                                            : FormatTsvLine(sample))
        << '\n';
  ++count_;
}

void CorpusWriter::Close() {
  closed_ = true;
  out_->flush();
  if (!*out_) throw IoError("write error on '" + path_ + "'");
}

std::vector<ParallelSample> ReadCorpus(const std::string& path,
                                       ReadOptions options) {
  CorpusReader reader(path, options);
  std::vector<ParallelSample> samples;
  while (auto s = reader.Next()) samples.push_back(*std::move(s));
  return samples;
}

std::size_t WriteCorpus(const std::vector<ParallelSample>& samples,
                        const std::string& path, CorpusFormat format) {
  CorpusWriter writer(path, format);
  for (const auto& s : samples) writer.Write(s);
  writer.Close();
  return writer.count();
}

std::string FormatProvenanceLine(const AugmentedRecord& record) {
  ordered_json j;
  j["id"] = record.sample.id;
  j["origin_id"] = record.origin_id;
  j["method"] = std::string(AugmentMethodName(record.method));
  switch (record.method) {
    case AugmentMethod::kSplit:
      j["segment"] = record.segment_index;
      break;
    case AugmentMethod::kReduce:
      j["retained"] = record.retained;
      break;
    case AugmentMethod::kOriginal:
      break;
  }
  return Dump(j);
}

std::unique_ptr<std::ostream> OpenOutput(const std::string& path) {
  if (path == "-") return std::make_unique<NonOwningStream>(std::cout);
  auto out = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace edacsc
