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
#include "rumorph/noun.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::S;
using testutil::W;

namespace {

std::string form(const char* lemma, Case c, Number n) {
  return S(inflect_noun(W(lemma), c, n));
}

}  // namespace

TEST_SUITE("noun") {

TEST_CASE("hard masculine declension") {
  CHECK_EQ(form("стол", Case::Genitive, Number::Singular), "стола");
  CHECK_EQ(form("стол", Case::Instrumental, Number::Singular), "столом");
  CHECK_EQ(form("стол", Case::Prepositional, Number::Plural), "столах");
  CHECK_EQ(form("стол", Case::Accusative, Number::Singular), "стол");
}

TEST_CASE("animate masculines copy the genitive into the accusative") {
  CHECK_EQ(form("герой", Case::Accusative, Number::Singular), "героя");
  CHECK_EQ(form("герой", Case::Accusative, Number::Plural), "героев");
  CHECK_EQ(form("конь", Case::Accusative, Number::Plural), "коней");
  CHECK_EQ(form("стол", Case::Accusative, Number::Plural), "столы");
}

TEST_CASE("feminine declensions") {
  CHECK_EQ(form("мама", Case::Dative, Number::Singular), "маме");
  CHECK_EQ(form("мама", Case::Genitive, Number::Plural), "мам");
  CHECK_EQ(form("книга", Case::Genitive, Number::Singular), "книги");
  CHECK_EQ(form("улица", Case::Instrumental, Number::Singular), "улицей");
  CHECK_EQ(form("ночь", Case::Instrumental, Number::Singular), "ночью");
  CHECK_EQ(form("ночь", Case::Genitive, Number::Plural), "ночей");
}

TEST_CASE("neuter declensions") {
  CHECK_EQ(form("море", Case::Genitive, Number::Plural), "морей");
  CHECK_EQ(form("слово", Case::Dative, Number::Plural), "словам");
  CHECK_EQ(form("время", Case::Genitive, Number::Singular), "времени");
  CHECK_EQ(form("время", Case::Nominative, Number::Plural), "времена");
}

TEST_CASE("velar stems take -и in the genitive") {
  CHECK_EQ(form("книга", Case::Nominative, Number::Plural), "книги");
  CHECK_EQ(form("собака", Case::Genitive, Number::Singular), "собаки");
}

TEST_CASE("fleeting vowels drop") {
  CHECK_EQ(form("сон", Case::Genitive, Number::Singular), "сна");
  CHECK_EQ(form("день", Case::Genitive, Number::Singular), "дня");
  CHECK_EQ(form("отец", Case::Genitive, Number::Singular), "отца");
}

TEST_CASE("masculine -а plural") {
  CHECK_EQ(form("город", Case::Nominative, Number::Plural), "города");
  CHECK_EQ(form("город", Case::Genitive, Number::Plural), "городов");
}

TEST_CASE("indeclinables never change") {
  for (Case c : kAllCases)
    for (Number n : kAllNumbers) {
      CHECK_EQ(form("пальто", c, n), "пальто");
      CHECK_EQ(form("кофе", c, n), "кофе");
      CHECK_EQ(form("такси", c, n), "такси");
    }
}

TEST_CASE("pluralia tantum reject the singular") {
  auto r = inflect_noun(W("ножницы"), Case::Genitive, Number::Singular);
  REQUIRE_FALSE(r.ok());
  CHECK_EQ(r.error().code, errc::no_such_form);
  CHECK_EQ(form("ножницы", Case::Genitive, Number::Plural), "ножниц");
}

TEST_CASE("noun_traits classifies gender and animacy") {
  auto t = noun_traits(W("собака"));
  REQUIRE(t.ok());
  CHECK_EQ(t->gender, Gender::Feminine);
  CHECK_EQ(t->animacy, Animacy::Animate);
  CHECK_FALSE(t->indeclinable);

  t = noun_traits(W("кофе"));
  REQUIRE(t.ok());
  CHECK_EQ(t->gender, Gender::Masculine);  // table override, not the -е rule
  CHECK(t->indeclinable);

  t = noun_traits(W("ночь"));
  REQUIRE(t.ok());
  CHECK_EQ(t->gender, Gender::Feminine);

  t = noun_traits(W("ножницы"));
  REQUIRE(t.ok());
  CHECK(t->pluralia_tantum);
}

TEST_CASE("paradigm covers all twelve slots") {
  auto p = noun_paradigm(W("время"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 12);
  CHECK_EQ(p->realized_count(), 12);
  const auto* slot = p->find(noun_slot(Case::Instrumental, Number::Plural));
  REQUIRE(slot);
  CHECK_EQ(slot->form->str(), "временами");
}

}  // TEST_SUITE
