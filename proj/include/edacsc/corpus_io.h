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

#ifndef EDACSC_CORPUS_IO_H_
#define EDACSC_CORPUS_IO_H_

#include <cstddef>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "edacsc/corpus.h"

namespace edacsc {

enum class CorpusFormat { kJsonl, kTsv };

// Accepts "jsonl" or "tsv".
CorpusFormat ParseCorpusFormat(std::string_view name);
// ".tsv" maps to tsv, everything else to jsonl.
CorpusFormat CorpusFormatForPath(std::string_view path);

// Single-line codecs. Parse functions throw a validation Error describing the
// problem (without line number).
std::string FormatJsonlLine(const ParallelSample& sample);
std::string FormatTsvLine(const ParallelSample& sample);
ParallelSample ParseJsonlLine(std::string_view line);
ParallelSample ParseTsvLine(std::string_view line);

struct ReadOptions {
  CorpusFormat format = CorpusFormat::kJsonl;
  bool lenient = false;  // skip and count malformed lines instead of failing
};

// Streaming reader. "-" reads standard input.
class CorpusReader {
 public:
  CorpusReader(const std::string& path, ReadOptions options);
  // Reads from a caller-owned stream.
  CorpusReader(std::istream* in, ReadOptions options);

  CorpusReader(const CorpusReader&) = delete;
  CorpusReader& operator=(const CorpusReader&) = delete;

  // Next well-formed sample, or nullopt at end of input. In strict mode a
  // malformed line throws a validation Error naming the line number.
  std::optional<ParallelSample> Next();

  // Line number of the sample most recently returned by Next().
  std::size_t line_number() const { return line_number_; }
  std::size_t skipped() const { return skipped_; }
  // Malformed lines seen in lenient mode (first few only).
  const std::vector<std::string>& skip_messages() const {
    return skip_messages_;
  }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  ReadOptions options_;
  std::string path_;
  std::string line_;
  std::size_t line_number_ = 0;
  std::size_t skipped_ = 0;
  std::vector<std::string> skip_messages_;
};

// Streaming writer. "-" writes standard output.
class CorpusWriter {
 public:
  CorpusWriter(const std::string& path, CorpusFormat format);
  CorpusWriter(std::ostream* out, CorpusFormat format);
  ~CorpusWriter();

  CorpusWriter(const CorpusWriter&) = delete;
  CorpusWriter& operator=(const CorpusWriter&) = delete;

  void Write(const ParallelSample& sample);
  // Flushes and checks the stream state; throws an I/O Error on failure.
  void Close();

  std::size_t count() const { return count_; }

 private:
  std::unique_ptr<std::ofstream> owned_;
  std::ostream* out_;
  CorpusFormat format_;
  std::string path_;
  std::size_t count_ = 0;
  bool closed_ = false;
};

std::vector<ParallelSample> ReadCorpus(const std::string& path,
                                       ReadOptions options);
std::size_t WriteCorpus(const std::vector<ParallelSample>& samples,
                        const std::string& path, CorpusFormat format);

// One provenance line per augmented record:
// {"id":...,"origin_id":...,"method":...,"segment":k} or ...,"retained":[..]}
std::string FormatProvenanceLine(const AugmentedRecord& record);

// Opens a text output file ("-" is standard output) or throws an I/O Error.
std::unique_ptr<std::ostream> OpenOutput(const std::string& path);

}  // namespace edacsc

#endif  // EDACSC_CORPUS_IO_H_
