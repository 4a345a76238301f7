// Copyright 2026 The cyclewalk authors
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

#ifndef CYCLEWALK_IO_HPP_
#define CYCLEWALK_IO_HPP_

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cyclewalk/types.hpp"

namespace cyclewalk::io {

/// Version string stamped into every output envelope.
inline constexpr std::string_view kOutputVersion = "1";

/// Shortest-round-trip decimal rendering of a double (17 significant
/// digits), locale-independent.  Identical bits always yield identical
/// bytes, which keeps output files reproducible.
std::string format_double(Scalar value);

/// Deterministic random stream: mt19937_64, doubles drawn by taking the top
/// 53 bits of each word ("mt19937_64-u53").
struct Rng {
  static constexpr std::string_view kAlgorithm = "mt19937_64-u53";

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t next() { return gen(); }

  /// Uniform in [0, 1).
  Scalar uniform01() {
    return static_cast<Scalar>(next() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 gen;
};

/// Minimal streaming JSON writer with caller-controlled key order and
/// number formatting.  (Reading is a different concern; tests use a general
/// JSON parser to validate what this writes.)
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(Scalar v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& null();

 private:
  void prefix();  // emits a separating comma if needed

  std::ostream& os_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

/// Escapes and quotes a string for JSON.
std::string json_quote(std::string_view s);

/// One CSV row from already-formatted cells (no quoting needed for this
/// artifact's numeric/enum payloads).
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace cyclewalk::io

#endif  // CYCLEWALK_IO_HPP_
