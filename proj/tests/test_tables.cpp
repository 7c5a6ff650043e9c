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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "rumorph/noun.hpp"
#include "rumorph/tables.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::W;

namespace {

// Restores builtin tables when a test body returns.
struct TableGuard {
  ~TableGuard() { reset_tables(); }
};

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("builtin snapshot is embedded and parsed") {
  const auto& data = detail::builtin_data();
  CHECK(data.count("indeclinable.txt"));
  CHECK(data.count("irregular-verbs.tsv"));
  const Tables& t = Tables::builtin();
  CHECK(t.indeclinable.count(U"кофе"));
  CHECK(t.second_conj.count(U"обидеть"));
  CHECK(t.imperfective_prefixed.count(U"везти"));
  CHECK(t.irregular_verbs.count(U"быть"));
  CHECK(t.suppletive_adverbs.count(U"хорошо"));
  CHECK_EQ(t.gender_overrides.at(U"кофе"), Gender::Masculine);
}

TEST_CASE("from_sources reports malformed lines with location") {
  std::map<std::string, std::string> src;
  src["gender-overrides.tsv"] = "кофе\tмасс\n";  // bad gender token
  auto r = Tables::from_sources(src);
  REQUIRE_FALSE(r.ok());
  CHECK_EQ(r.error().code, errc::parse);
  CHECK(r.error().message.find("gender-overrides.tsv") != std::string::npos);
}

TEST_CASE("from_sources accepts comments and blank lines") {
  std::map<std::string, std::string> src;
  src["indeclinable.txt"] = "# comment\n\nтакси\n";
  auto r = Tables::from_sources(src);
  REQUIRE(r.ok());
  CHECK(r->indeclinable.count(U"такси"));
  CHECK_FALSE(r->indeclinable.count(U"кофе"));  // no builtin merge here
}

TEST_CASE("load_exception_dir overlays builtin data") {
  TableGuard guard;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rumorph_tables_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "indeclinable.txt");
    out << "тестонимо\n";
  }
  auto n = load_exception_dir(dir.string());
  REQUIRE(n.ok());
  CHECK_EQ(*n, 1);
  // The overlay adds the new lemma and keeps the builtin entries.
  CHECK(active_tables().indeclinable.count(U"тестонимо"));
  CHECK(active_tables().indeclinable.count(U"кофе"));
  auto p = noun_paradigm(W("тестонимо"));
  REQUIRE(p.ok());
  for (const auto& slot : p->slots) CHECK_EQ(slot.form->str(), "тестонимо");
  fs::remove_all(dir);
}

TEST_CASE("load_exception_dir fails on a missing directory") {
  TableGuard guard;
  auto r = load_exception_dir("/nonexistent/high/noon");
  CHECK_FALSE(r.ok());
}

TEST_CASE("reset restores builtin behaviour") {
  CHECK_FALSE(active_tables().indeclinable.count(U"тестонимо"));
}

}  // TEST_SUITE
