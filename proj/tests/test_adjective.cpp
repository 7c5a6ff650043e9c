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
#include "rumorph/adjective.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::S;
using testutil::W;

namespace {

std::string lng(const char* lemma, GenderOrPlural g, Case c,
                std::optional<Animacy> a = {}) {
  FeatureBundle b = adjective_long_slot(c, g);
  b.animacy = a;
  return S(inflect_adjective(W(lemma), b));
}

std::string shrt(const char* lemma, GenderOrPlural g) {
  return S(inflect_adjective(W(lemma), adjective_short_slot(g)));
}

}  // namespace

TEST_SUITE("adjective") {

TEST_CASE("adjective_shaped recognizes long-form endings") {
  CHECK(adjective_shaped(W("красивый")));
  CHECK(adjective_shaped(W("синий")));
  CHECK(adjective_shaped(W("большой")));
  CHECK(adjective_shaped(W("улыбающийся")));
  CHECK_FALSE(adjective_shaped(W("стол")));
  CHECK_FALSE(adjective_shaped(W("быстро")));
}

TEST_CASE("hard declension") {
  CHECK_EQ(lng("красивый", GenderOrPlural::Masculine, Case::Genitive),
           "красивого");
  CHECK_EQ(lng("красивый", GenderOrPlural::Feminine, Case::Accusative),
           "красивую");
  CHECK_EQ(lng("красивый", GenderOrPlural::Neuter, Case::Nominative),
           "красивое");
  CHECK_EQ(lng("красивый", GenderOrPlural::Plural, Case::Prepositional),
           "красивых");
}

TEST_CASE("soft and sibilant declensions") {
  CHECK_EQ(lng("синий", GenderOrPlural::Feminine, Case::Nominative), "синяя");
  CHECK_EQ(lng("синий", GenderOrPlural::Masculine, Case::Instrumental),
           "синим");
  CHECK_EQ(lng("хороший", GenderOrPlural::Neuter, Case::Nominative),
           "хорошее");
  CHECK_EQ(lng("хороший", GenderOrPlural::Feminine, Case::Genitive),
           "хорошей");
  CHECK_EQ(lng("большой", GenderOrPlural::Neuter, Case::Nominative),
           "большое");  // stressed sibilant keeps о
  CHECK_EQ(lng("русский", GenderOrPlural::Masculine, Case::Genitive),
           "русского");
}

TEST_CASE("possessive-type soft declension") {
  CHECK_EQ(lng("третий", GenderOrPlural::Feminine, Case::Nominative),
           "третья");
  CHECK_EQ(lng("третий", GenderOrPlural::Masculine, Case::Genitive),
           "третьего");
  CHECK_EQ(lng("третий", GenderOrPlural::Plural, Case::Nominative), "третьи");
}

TEST_CASE("animacy resolves the accusative") {
  CHECK_EQ(lng("красивый", GenderOrPlural::Masculine, Case::Accusative,
               Animacy::Animate),
           "красивого");
  CHECK_EQ(lng("красивый", GenderOrPlural::Masculine, Case::Accusative,
               Animacy::Inanimate),
           "красивый");
  CHECK_EQ(lng("красивый", GenderOrPlural::Plural, Case::Accusative,
               Animacy::Animate),
           "красивых");
  // Unset animacy defaults to the inanimate (nominative-copy) reading.
  CHECK_EQ(lng("красивый", GenderOrPlural::Plural, Case::Accusative),
           "красивые");
  // Feminine accusative ignores animacy entirely.
  CHECK_EQ(lng("красивый", GenderOrPlural::Feminine, Case::Accusative,
               Animacy::Animate),
           "красивую");
}

TEST_CASE("short forms") {
  CHECK_EQ(shrt("добрый", GenderOrPlural::Masculine), "добр");
  CHECK_EQ(shrt("добрый", GenderOrPlural::Feminine), "добра");
  CHECK_EQ(shrt("добрый", GenderOrPlural::Neuter), "добро");
  CHECK_EQ(shrt("добрый", GenderOrPlural::Plural), "добры");
  CHECK_EQ(shrt("быстрый", GenderOrPlural::Masculine), "быстр");
}

TEST_CASE("non-adjectives are rejected") {
  auto r = inflect_adjective(
      W("стол"), adjective_long_slot(Case::Nominative, GenderOrPlural::Masculine));
  REQUIRE_FALSE(r.ok());
  CHECK_EQ(r.error().code, errc::not_adjective_shaped);
}

TEST_CASE("paradigm has 24 long plus 4 short slots") {
  auto p = adjective_paradigm(W("добрый"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 28);
  CHECK_EQ(p->realized_count(), 28);
}

TEST_CASE("adverb degrees") {
  auto d = adverb_degrees(W("быстро"));
  REQUIRE(d.ok());
  CHECK_EQ(d->comparative.str(), "быстрее");
  CHECK_EQ(d->superlative.str(), "быстрее всего");
  CHECK_EQ(adverb_degrees(W("громко"))->comparative.str(), "громче");
  CHECK_EQ(adverb_degrees(W("тихо"))->comparative.str(), "тише");
  // Suppletive comparative from the exception table.
  CHECK_EQ(adverb_degrees(W("хорошо"))->comparative.str(), "лучше");
  auto p = adverb_paradigm(W("быстро"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 2);
}

}  // TEST_SUITE
