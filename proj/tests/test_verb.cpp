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
#include "rumorph/verb.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::S;
using testutil::W;

namespace {

std::string pres(const char* inf, Person p, Number n) {
  return S(conjugate(W(inf), verb_present_slot(p, n)));
}

std::string futr(const char* inf, Person p, Number n) {
  return S(conjugate(W(inf), verb_future_slot(p, n)));
}

std::string past(const char* inf, GenderOrPlural g) {
  return S(conjugate(W(inf), verb_past_slot(g)));
}

}  // namespace

TEST_SUITE("verb") {

TEST_CASE("aspect heuristics") {
  CHECK_EQ(*get_perfectness(W("читать")), Aspect::Imperfective);
  CHECK_EQ(*get_perfectness(W("прочитать")), Aspect::Perfective);
  CHECK_EQ(*get_perfectness(W("решить")), Aspect::Perfective);
  CHECK_EQ(*get_perfectness(W("решать")), Aspect::Imperfective);
  CHECK_EQ(*get_perfectness(W("покупать")), Aspect::Imperfective);  // table
  CHECK_EQ(*get_perfectness(W("везти")), Aspect::Imperfective);     // table
  CHECK_EQ(*get_perfectness(W("казнить")), Aspect::Biaspectual);
}

TEST_CASE("first conjugation present") {
  CHECK_EQ(pres("читать", Person::First, Number::Singular), "читаю");
  CHECK_EQ(pres("читать", Person::Second, Number::Singular), "читаешь");
  CHECK_EQ(pres("читать", Person::Third, Number::Plural), "читают");
  CHECK_EQ(pres("рисовать", Person::First, Number::Singular), "рисую");
  CHECK_EQ(pres("давать", Person::Third, Number::Singular), "дает");
  CHECK_EQ(pres("нести", Person::First, Number::Singular), "несу");
  CHECK_EQ(pres("класть", Person::Second, Number::Singular), "кладешь");
}

TEST_CASE("second conjugation present with mutation") {
  CHECK_EQ(pres("говорить", Person::Third, Number::Plural), "говорят");
  CHECK_EQ(pres("любить", Person::First, Number::Singular), "люблю");
  CHECK_EQ(pres("любить", Person::Second, Number::Singular), "любишь");
  CHECK_EQ(pres("носить", Person::First, Number::Singular), "ношу");
  CHECK_EQ(pres("смотреть", Person::First, Number::Singular), "смотрю");
}

TEST_CASE("reflexive suffix re-attaches after the ending") {
  CHECK_EQ(pres("улыбаться", Person::First, Number::Singular), "улыбаюсь");
  CHECK_EQ(pres("улыбаться", Person::Third, Number::Singular), "улыбается");
  CHECK_EQ(past("улыбаться", GenderOrPlural::Feminine), "улыбалась");
  CHECK_EQ(S(imperative(W("улыбаться"), Number::Plural)), "улыбайтесь");
}

TEST_CASE("perfective future is synthetic") {
  CHECK_EQ(futr("решить", Person::First, Number::Singular), "решу");
  CHECK_EQ(futr("решить", Person::Third, Number::Plural), "решат");
  CHECK_EQ(futr("купить", Person::First, Number::Singular), "куплю");
  CHECK_EQ(futr("бросить", Person::First, Number::Singular), "брошу");
  // Perfective verbs have no present row.
  auto r = conjugate(W("решить"),
                     verb_present_slot(Person::First, Number::Singular));
  REQUIRE_FALSE(r.ok());
  CHECK_EQ(r.error().code, errc::no_such_form);
}

TEST_CASE("imperfective future is analytic") {
  CHECK_EQ(futr("читать", Person::First, Number::Singular), "буду читать");
  CHECK_EQ(futr("читать", Person::Third, Number::Plural), "будут читать");
  CHECK_EQ(futr("улыбаться", Person::Second, Number::Plural),
           "будете улыбаться");
}

TEST_CASE("быть takes the synthetic future") {
  CHECK_EQ(futr("быть", Person::First, Number::Singular), "буду");
  CHECK_EQ(futr("быть", Person::Third, Number::Plural), "будут");
  CHECK_EQ(past("быть", GenderOrPlural::Feminine), "была");
  CHECK_FALSE(
      conjugate(W("быть"), verb_present_slot(Person::First, Number::Singular))
          .ok());
}

TEST_CASE("past tense") {
  CHECK_EQ(past("читать", GenderOrPlural::Masculine), "читал");
  CHECK_EQ(past("читать", GenderOrPlural::Plural), "читали");
  CHECK_EQ(past("нести", GenderOrPlural::Masculine), "нес");
  CHECK_EQ(past("нести", GenderOrPlural::Feminine), "несла");
  CHECK_EQ(past("везти", GenderOrPlural::Masculine), "вез");
  CHECK_EQ(past("вести", GenderOrPlural::Masculine), "вел");
  CHECK_EQ(past("идти", GenderOrPlural::Masculine), "шел");
  CHECK_EQ(past("идти", GenderOrPlural::Feminine), "шла");
}

TEST_CASE("empty bundle names the infinitive") {
  CHECK_EQ(S(conjugate(W("читать"), FeatureBundle{})), "читать");
}

TEST_CASE("imperatives") {
  CHECK_EQ(S(imperative(W("читать"), Number::Singular)), "читай");
  CHECK_EQ(S(imperative(W("читать"), Number::Plural)), "читайте");
  CHECK_EQ(S(imperative(W("говорить"), Number::Singular)), "говори");
  CHECK_EQ(S(imperative(W("бросить"), Number::Singular)), "брось");
  CHECK_EQ(S(imperative(W("бросить"), Number::Plural)), "бросьте");
  CHECK_EQ(S(imperative(W("быть"), Number::Singular)), "будь");
  CHECK_EQ(S(imperative(W("идти"), Number::Singular)), "иди");
}

TEST_CASE("gerunds") {
  // The golden pair: both gerund readings of решать.
  CHECK_EQ(S(perfective_gerund(W("решать"))), "решав");
  CHECK_EQ(S(imperfective_gerund(W("решать"))), "решая");

  CHECK_EQ(S(imperfective_gerund(W("читать"))), "читая");
  CHECK_EQ(S(imperfective_gerund(W("говорить"))), "говоря");
  CHECK_EQ(S(imperfective_gerund(W("улыбаться"))), "улыбаясь");
  CHECK_EQ(S(imperfective_gerund(W("быть"))), "будучи");
  CHECK_EQ(S(imperfective_gerund(W("идти"))), "идя");
  CHECK_EQ(S(perfective_gerund(W("решить"))), "решив");
  CHECK_EQ(S(perfective_gerund(W("прыгнуть"))), "прыгнув");
  // Perfective verbs have no imperfective gerund.
  CHECK_FALSE(imperfective_gerund(W("решить")).ok());
  auto p = gerund_paradigm(W("решать"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 2);
  CHECK_EQ(p->realized_count(), 2);
}

TEST_CASE("participle lemmas") {
  CHECK_EQ(S(participle_lemma(W("читать"), ParticipleKind::PresentActive)),
           "читающий");
  CHECK_EQ(S(participle_lemma(W("любить"), ParticipleKind::PresentActive)),
           "любящий");
  CHECK_EQ(S(participle_lemma(W("читать"), ParticipleKind::PastActive)),
           "читавший");
  CHECK_EQ(S(participle_lemma(W("решить"), ParticipleKind::PastPassive)),
           "решенный");
  CHECK_EQ(S(participle_lemma(W("купить"), ParticipleKind::PastPassive)),
           "купленный");
  CHECK_EQ(S(participle_lemma(W("бросить"), ParticipleKind::PastPassive)),
           "брошенный");
  CHECK_EQ(S(participle_lemma(W("прочитать"), ParticipleKind::PastPassive)),
           "прочитанный");
  // No present participles for perfective verbs.
  CHECK_FALSE(
      participle_lemma(W("решить"), ParticipleKind::PresentActive).ok());
}

TEST_CASE("declined and short participles") {
  CHECK_EQ(S(participle(W("решить"), ParticipleKind::PastPassive,
                        GenderOrPlural::Feminine, Case::Nominative,
                        Animacy::Inanimate)),
           "решенная");
  CHECK_EQ(S(participle(W("читать"), ParticipleKind::PresentActive,
                        GenderOrPlural::Plural, Case::Genitive,
                        Animacy::Inanimate)),
           "читающих");
  CHECK_EQ(S(participle_short(W("решить"), GenderOrPlural::Masculine)),
           "решен");
  CHECK_EQ(S(participle_short(W("решить"), GenderOrPlural::Plural)), "решены");
  CHECK_EQ(S(participle_short(W("прочитать"), GenderOrPlural::Feminine)),
           "прочитана");
  auto p = participle_paradigm(W("решить"), ParticipleKind::PastPassive);
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 28);
  CHECK_EQ(p->realized_count(), 28);
}

}  // TEST_SUITE
