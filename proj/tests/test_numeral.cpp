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
#include "rumorph/numeral.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::S;
using testutil::W;

namespace {

std::string card(int v, Case c, Gender g = Gender::Masculine,
                 Animacy a = Animacy::Inanimate) {
  return S(cardinal(v, c, g, a));
}

std::string ord(int v, GenderOrPlural g, Case c) {
  return S(ordinal(v, g, c, Animacy::Inanimate));
}

}  // namespace

TEST_SUITE("numeral") {

TEST_CASE("cardinal units and gender") {
  CHECK_EQ(card(0, Case::Nominative), "ноль");
  CHECK_EQ(card(1, Case::Nominative), "один");
  CHECK_EQ(card(1, Case::Nominative, Gender::Feminine), "одна");
  CHECK_EQ(card(1, Case::Nominative, Gender::Neuter), "одно");
  CHECK_EQ(card(2, Case::Nominative), "два");
  CHECK_EQ(card(2, Case::Nominative, Gender::Feminine), "две");
  CHECK_EQ(card(5, Case::Nominative), "пять");
}

TEST_CASE("cardinal case government") {
  CHECK_EQ(card(2, Case::Genitive), "двух");
  CHECK_EQ(card(3, Case::Instrumental), "тремя");
  CHECK_EQ(card(5, Case::Instrumental), "пятью");
  CHECK_EQ(card(40, Case::Genitive), "сорока");
  CHECK_EQ(card(40, Case::Nominative), "сорок");
  CHECK_EQ(card(100, Case::Dative), "ста");
  CHECK_EQ(card(1, Case::Accusative, Gender::Masculine, Animacy::Animate),
           "одного");
  CHECK_EQ(card(2, Case::Accusative, Gender::Masculine, Animacy::Animate),
           "двух");
  CHECK_EQ(card(2, Case::Accusative, Gender::Masculine, Animacy::Inanimate),
           "два");
}

TEST_CASE("compound cardinals inflect every word") {
  CHECK_EQ(card(22, Case::Nominative), "двадцать два");
  CHECK_EQ(card(22, Case::Nominative, Gender::Feminine), "двадцать две");
  CHECK_EQ(card(38, Case::Genitive), "тридцати восьми");
  CHECK_EQ(card(155, Case::Nominative), "сто пятьдесят пять");
  CHECK_EQ(card(155, Case::Instrumental),
           "ста пятьюдесятью пятью");
  CHECK_EQ(card(2000, Case::Nominative), "две тысячи");
  CHECK_EQ(card(5000, Case::Nominative), "пять тысяч");
  CHECK_EQ(card(2000, Case::Dative), "двум тысячам");
  CHECK_EQ(card(1999, Case::Nominative),
           "тысяча девятьсот девяносто девять");
}

TEST_CASE("values outside 0..9999 are range errors") {
  CHECK_EQ(cardinal(-1, Case::Nominative, Gender::Masculine,
                    Animacy::Inanimate)
               .error()
               .code,
           errc::range);
  CHECK_EQ(cardinal(10000, Case::Nominative, Gender::Masculine,
                    Animacy::Inanimate)
               .error()
               .code,
           errc::range);
}

TEST_CASE("ordinals decline as adjectives") {
  CHECK_EQ(ord(1, GenderOrPlural::Masculine, Case::Nominative), "первый");
  CHECK_EQ(ord(1, GenderOrPlural::Feminine, Case::Dative), "первой");
  CHECK_EQ(ord(3, GenderOrPlural::Feminine, Case::Nominative), "третья");
  CHECK_EQ(ord(3, GenderOrPlural::Masculine, Case::Genitive), "третьего");
  CHECK_EQ(ord(40, GenderOrPlural::Neuter, Case::Nominative), "сороковое");
  CHECK_EQ(ord(100, GenderOrPlural::Masculine, Case::Nominative), "сотый");
  CHECK_EQ(ord(1000, GenderOrPlural::Masculine, Case::Nominative),
           "тысячный");
}

TEST_CASE("compound ordinals decline only the last word") {
  CHECK_EQ(ord(38, GenderOrPlural::Masculine, Case::Genitive),
           "тридцать восьмого");
  CHECK_EQ(ord(22, GenderOrPlural::Feminine, Case::Nominative),
           "двадцать вторая");
  CHECK_EQ(ord(101, GenderOrPlural::Masculine, Case::Nominative),
           "сто первый");
}

TEST_CASE("ordinal lemma and the reverse lookups") {
  CHECK_EQ(S(ordinal_lemma(3)), "третий");
  CHECK_EQ(S(ordinal_lemma(40)), "сороковой");
  CHECK_EQ(S(ordinal_lemma(900)), "девятисотый");
  CHECK_EQ(cardinal_value(W("два")), 2);
  CHECK_EQ(cardinal_value(W("сорок")), 40);
  CHECK_EQ(cardinal_value(W("тысяча")), 1000);
  CHECK_EQ(cardinal_value(W("стол")), std::nullopt);
  CHECK_EQ(ordinal_value(W("третий")), 3);
  CHECK_EQ(ordinal_value(W("сороковой")), 40);
  CHECK_EQ(ordinal_value(W("красивый")), std::nullopt);
}

TEST_CASE("paradigm shapes") {
  auto c = cardinal_paradigm(2);
  REQUIRE(c.ok());
  CHECK_EQ(c->size(), 24);
  auto o = ordinal_paradigm(38);
  REQUIRE(o.ok());
  CHECK_EQ(o->size(), 18);
  CHECK_EQ(o->realized_count(), 18);
}

}  // TEST_SUITE
