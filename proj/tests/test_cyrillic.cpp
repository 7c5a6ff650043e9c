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

#include "doctest.h"
#include "rumorph/cyrillic.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::W;

TEST_SUITE("cyrillic") {

TEST_CASE("parse normalizes case, yo and stress marks") {
  CHECK_EQ(W("Стол").str(), "стол");
  CHECK_EQ(W("Ёлка").str(), "елка");
  CHECK_EQ(W("  мама  ").str(), "мама");
  CHECK_EQ(W("идЁт").str(), "идет");
  // U+0301 combining acute after the stressed vowel.
  CHECK_EQ(W("вода́").str(), "вода");
}

TEST_CASE("parse rejects non-Russian input") {
  CHECK_FALSE(CyrillicWord::parse("table").ok());
  CHECK_FALSE(CyrillicWord::parse("").ok());
  CHECK_FALSE(CyrillicWord::parse("сто л").ok());   // inner space
  CHECK_FALSE(CyrillicWord::parse("стол1").ok());
  CHECK_FALSE(CyrillicWord::parse("st\xD0").ok());  // broken UTF-8
  CHECK_EQ(CyrillicWord::parse("xyz").error().code, errc::not_russian);
}

TEST_CASE("hyphenated lemmas survive") {
  CHECK_EQ(W("кто-то").str(), "кто-то");
}

TEST_CASE("utf8 round trip") {
  std::u32string u = utf8_decode("привет");
  CHECK_EQ(u.size(), 6);
  CHECK_EQ(utf8_encode(u), "привет");
  bool ok = true;
  utf8_decode("\xFF\xFE", &ok);
  CHECK_FALSE(ok);
}

TEST_CASE("letter classes") {
  CHECK(is_vowel(U'а'));
  CHECK(is_vowel(U'ю'));
  CHECK_FALSE(is_vowel(U'й'));
  CHECK(is_consonant(U'й'));
  CHECK_FALSE(is_consonant(U'ь'));
  CHECK(is_sibilant(U'щ'));
  CHECK_FALSE(is_sibilant(U'с'));
  CHECK(is_velar(U'к'));
  CHECK(is_cyrillic_letter(U'ъ'));
  CHECK_FALSE(is_cyrillic_letter(U'q'));
}

TEST_CASE("till removes codepoints from the end") {
  auto w = W("словом");
  CHECK_EQ(utf8_encode(*till(w, 2)), "слов");
  CHECK_EQ(utf8_encode(*till(w, 0)), "словом");
  CHECK_EQ(utf8_encode(*till(w, 6)), "");
  CHECK_EQ(till(w, 7).error().code, errc::underflow);
}

TEST_CASE("join_words keeps single spaces") {
  CyrillicWord j = join_words({W("буду"), W("читать")});
  CHECK_EQ(j.str(), "буду читать");
  CHECK_EQ(j.size(), 11);
}

TEST_CASE("from_normalized trusts the caller") {
  CyrillicWord w = CyrillicWord::from_normalized(U"сорок два");
  CHECK_EQ(w.str(), "сорок два");
  CHECK(w.ends_with(U"два"));
  CHECK(w.starts_with(U"сорок"));
  CHECK_EQ(w.back(), U'а');
}

}  // TEST_SUITE
