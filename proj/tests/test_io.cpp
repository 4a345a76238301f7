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

#include <cstdint>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "cyclewalk/io.hpp"

namespace cyclewalk {
namespace {

TEST_CASE("io: format_double round-trips exactly") {
  for (Scalar v : {0.0, 1.0, -1.0, 0.1, kPi, -kPi / 3, 1e-300, 12345.6789,
                   5.0e17}) {
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(2.0) == "2");
}

TEST_CASE("io: json writer emits valid, ordered documents") {
  std::ostringstream os;
  io::JsonWriter w(os);
  w.begin_object();
  w.key("name").value(std::string_view("q\"uo\\te\n"));
  w.key("count").value(3);
  w.key("weight").value(0.25);
  w.key("flag").value(true);
  w.key("missing").null();
  w.key("items");
  w.begin_array();
  w.value(1);
  w.begin_object();
  w.key("nested").value(false);
  w.end_object();
  w.begin_array();
  w.end_array();
  w.end_array();
  w.end_object();

  const auto parsed = nlohmann::json::parse(os.str());
  CHECK(parsed["name"] == "q\"uo\\te\n");
  CHECK(parsed["count"] == 3);
  CHECK(parsed["weight"] == 0.25);
  CHECK(parsed["flag"] == true);
  CHECK(parsed["missing"].is_null());
  CHECK(parsed["items"].size() == 3);
  CHECK(parsed["items"][1]["nested"] == false);
  CHECK(parsed["items"][2].is_array());

  // Key order is exactly insertion order.
  CHECK(os.str().find("\"name\"") < os.str().find("\"count\""));
  CHECK(os.str().find("\"count\"") < os.str().find("\"weight\""));
}

TEST_CASE("io: rng stream is deterministic and uniform in [0, 1)") {
  io::Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    const Scalar x = a.uniform01();
    CHECK(x == b.uniform01());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  io::Rng c(124);
  CHECK(io::Rng(123).uniform01() != c.uniform01());
  CHECK(io::Rng::kAlgorithm == "mt19937_64-u53");
}

TEST_CASE("io: csv rows join cells with commas") {
  CHECK(io::csv_row({"a", "b", "c"}) == "a,b,c\n");
  CHECK(io::csv_row({"1", "", "3"}) == "1,,3\n");
  CHECK(io::csv_row({}) == "\n");
}

}  // namespace
}  // namespace cyclewalk
