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

#include "edacsc/mock_corrector.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::json;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::u32string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char32_t c : text) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (c >> shift) & 0xFF;
      h *= 0x100000001B3ull;
    }
  }
  return h;
}

// Uniform in [0, 1) from the top 53 bits.
double NextUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [0, n) by rejection.
std::uint64_t NextBelow(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

char32_t SingleChar(const std::string& s, const char* what) {
  const auto text = DecodeUtf8(s);
  if (!text || text->size() != 1) {
    throw ValidationError(std::string(what) + " must be a single character: '" +
                          s + "'");
  }
  return (*text)[0];
}

}  // namespace

MockCorrectorSpec ParseMockSpec(std::string_view json_text) {
  MockCorrectorSpec spec;
  try {
    const auto j = json::parse(json_text);
    if (!j.is_object()) throw ValidationError("mock spec must be an object");
    if (j.contains("substitutions")) {
      for (const auto& [from, to] : j.at("substitutions").items()) {
        spec.substitutions[SingleChar(from, "substitution key")] =
            SingleChar(to.get<std::string>(), "substitution value");
      }
    }
    spec.overcorrection_rate = j.value("overcorrection_rate", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.overcorrection_pool = DecodeUtf8OrThrow(
        j.value("overcorrection_pool", std::string()), "overcorrection_pool");
    spec.max_substitutions_per_call =
        j.value("max_substitutions_per_call", std::size_t{0});
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid mock spec: ") + e.what());
  }
  if (!(spec.overcorrection_rate >= 0.0 && spec.overcorrection_rate <= 1.0)) {
    throw ValidationError("overcorrection_rate must be in [0, 1]");
  }
  return spec;
}

MockCorrectorSpec LoadMockSpec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseMockSpec(buf.str());
}

Text RunMock(const MockCorrectorSpec& spec, std::u32string_view text) {
  std::vector<char32_t> pool(spec.overcorrection_pool.begin(),
                             spec.overcorrection_pool.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::mt19937_64 rng(SplitMix64(spec.seed ^ Fnv1a(text)));
  Text out(text);
  std::size_t substituted = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    const char32_t c = text[j];
    if (auto it = spec.substitutions.find(c); it != spec.substitutions.end()) {
      if (spec.max_substitutions_per_call == 0 ||
          substituted < spec.max_substitutions_per_call) {
        out[j] = it->second;
        ++substituted;
      }
      continue;
    }
    if (pool.size() < 2 || !std::binary_search(pool.begin(), pool.end(), c)) {
      continue;
    }
    if (NextUnit(rng) < spec.overcorrection_rate) {
      // Pick among the pool without c.
      const auto self = std::lower_bound(pool.begin(), pool.end(), c);
      std::size_t k = NextBelow(rng, pool.size() - 1);
      if (k >= static_cast<std::size_t>(self - pool.begin())) ++k;
      out[j] = pool[k];
    }
  }
  return out;
}

MockCorrector::MockCorrector(MockCorrectorSpec spec) : spec_(std::move(spec)) {}

std::vector<CorrectorResponse> MockCorrector::Exchange(
    const std::vector<CorrectorRequest>& requests) {
  std::vector<CorrectorResponse> out;
  out.reserve(requests.size());
  for (const auto& r : requests) out.push_back({r.id, RunMock(spec_, r.text)});
  return out;
}

int ServeCorrector(Corrector& corrector, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  out << HandshakeLine() << '\n' << std::flush;
  std::string line;
  if (!std::getline(in, line)) {
    err << "corrector: no handshake received\n";
    return static_cast<int>(ErrorKind::kProtocol);
  }
  try {
    CheckHandshake(line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto responses = corrector.Exchange({ParseMessage(line)});
      for (const auto& r : responses) out << FormatMessage(r) << '\n';
      // Flush only when no further request is already buffered.
      if (in.rdbuf()->in_avail() <= 0) out.flush();
    }
  } catch (const Error& e) {
    err << "corrector: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  }
  out.flush();
  return 0;
}

}  // namespace edacsc
