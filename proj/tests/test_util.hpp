// Copyright 2026 The rumorph Authors.
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

#ifndef RUMORPH_TESTS_TEST_UTIL_HPP_
#define RUMORPH_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rumorph/cyrillic.hpp"
#include "rumorph/result.hpp"

#ifndef RUMORPH_FIXTURE_DIR
#error "RUMORPH_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace rumorph::testutil {

inline std::string fixture(const std::string& name) {
  return std::string(RUMORPH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Parses a known-good lemma; aborts the test on failure.
inline CyrillicWord W(std::string_view utf8) {
  auto r = CyrillicWord::parse(utf8);
  REQUIRE_MESSAGE(r.ok(), "unparseable test lemma");
  return *r;
}

// Renders a word result as the surface string, or "<errc>" for comparison
// failure messages that name the error.
inline std::string S(const Result<CyrillicWord>& r) {
  if (r.ok()) return r->str();
  return std::string("<") + errc_name(r.error().code) + ">";
}

}  // namespace rumorph::testutil

#endif  // RUMORPH_TESTS_TEST_UTIL_HPP_
