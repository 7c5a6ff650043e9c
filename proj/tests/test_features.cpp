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
#include "rumorph/features.hpp"

using namespace rumorph;

TEST_SUITE("features") {

TEST_CASE("enum names round-trip") {
  for (Case c : kAllCases) CHECK_EQ(case_from(name_of(c)), c);
  for (Number n : kAllNumbers) CHECK_EQ(number_from(name_of(n)), n);
  for (Gender g : kAllGenders) CHECK_EQ(gender_from(name_of(g)), g);
  for (Person p : kAllPersons) CHECK_EQ(person_from(name_of(p)), p);
  CHECK_EQ(name_of(Case::Genitive), "gen");
  CHECK_EQ(name_of(Tense::Future), "futr");
  CHECK_EQ(name_of(ParticipleKind::PastPassive), "past-pass");
  CHECK_EQ(tense_from("no-such"), std::nullopt);
}

TEST_CASE("pos names round-trip") {
  for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb,
                Pos::Ordinal, Pos::Cardinal, Pos::ParticiplePresAct,
                Pos::ParticiplePastAct, Pos::ParticiplePastPass, Pos::Gerund,
                Pos::Imperative})
    CHECK_EQ(pos_from(name_of(p)), p);
  CHECK_EQ(name_of(Pos::ParticiplePresAct), "prt-pres-act");
}

TEST_CASE("bundle tag serialization is canonical") {
  CHECK_EQ(FeatureBundle{}.tag(), "");
  CHECK(FeatureBundle{}.empty());
  CHECK_EQ(noun_slot(Case::Genitive, Number::Singular).tag(),
           "case=gen;num=sg");
  CHECK_EQ(adjective_long_slot(Case::Dative, GenderOrPlural::Plural).tag(),
           "case=dat;num=pl");
  CHECK_EQ(adjective_long_slot(Case::Dative, GenderOrPlural::Feminine).tag(),
           "case=dat;num=sg;gen=fem");
  CHECK_EQ(verb_past_slot(GenderOrPlural::Masculine).tag(),
           "num=sg;gen=masc;tense=past");
  CHECK_EQ(verb_present_slot(Person::First, Number::Singular).tag(),
           "num=sg;pers=1;tense=pres");
  // The analytic future slot differs from the plain one only by the marker.
  CHECK_EQ(verb_future_analytic_slot(Person::Third, Number::Plural).tag(),
           "num=pl;pers=3;tense=futr;asp=impf");
  CHECK_NE(verb_future_slot(Person::Third, Number::Plural),
           verb_future_analytic_slot(Person::Third, Number::Plural));
}

TEST_CASE("tags parse back to equal bundles") {
  const FeatureBundle samples[] = {
      FeatureBundle{},
      noun_slot(Case::Prepositional, Number::Plural),
      adjective_long_slot(Case::Accusative, GenderOrPlural::Masculine),
      adjective_short_slot(GenderOrPlural::Neuter),
      verb_present_slot(Person::Second, Number::Plural),
      verb_future_analytic_slot(Person::First, Number::Singular),
      verb_past_slot(GenderOrPlural::Plural),
      infinitive_slot(),
  };
  for (const FeatureBundle& b : samples) {
    auto back = FeatureBundle::from_tag(b.tag());
    REQUIRE(back.ok());
    CHECK_EQ(*back, b);
  }
  CHECK_FALSE(FeatureBundle::from_tag("case=bogus").ok());
  CHECK_FALSE(FeatureBundle::from_tag("nonsense").ok());
}

TEST_CASE("to_gender_or_plural maps the three genders") {
  CHECK_EQ(to_gender_or_plural(Gender::Masculine), GenderOrPlural::Masculine);
  CHECK_EQ(to_gender_or_plural(Gender::Feminine), GenderOrPlural::Feminine);
  CHECK_EQ(to_gender_or_plural(Gender::Neuter), GenderOrPlural::Neuter);
}

}  // TEST_SUITE
