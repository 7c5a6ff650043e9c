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

#include "rumorph/paradigm.hpp"

namespace rumorph {

namespace {

std::vector<FeatureBundle> make_noun_slots() {
  std::vector<FeatureBundle> t;
  for (Case c : kAllCases)
    for (Number n : kAllNumbers) t.push_back(noun_slot(c, n));
  return t;  // 12
}

std::vector<FeatureBundle> make_adjective_slots() {
  std::vector<FeatureBundle> t;
  for (Case c : kAllCases)
    for (GenderOrPlural g : kAllGenderOrPlural)
      t.push_back(adjective_long_slot(c, g));
  for (GenderOrPlural g : kAllGenderOrPlural)
    t.push_back(adjective_short_slot(g));
  return t;  // 28
}

std::vector<FeatureBundle> make_participle_slots(ParticipleKind kind) {
  std::vector<FeatureBundle> t = make_adjective_slots();
  for (FeatureBundle& b : t) b.participle = kind;
  return t;  // 28
}

void push_person_series(std::vector<FeatureBundle>* t, Tense tense,
                        bool analytic_marker) {
  for (Number n : kAllNumbers)
    for (Person p : kAllPersons) {
      FeatureBundle b = analytic_marker
                            ? verb_future_analytic_slot(p, n)
                            : verb_present_slot(p, n);
      b.tense = tense;
      t->push_back(b);
    }
}

std::vector<FeatureBundle> make_verb_slots() {
  std::vector<FeatureBundle> t;
  t.push_back(infinitive_slot());            // 1
  push_person_series(&t, Tense::Present, false);            // +6
  push_person_series(&t, Tense::Future, false);             // +6
  for (GenderOrPlural g : kAllGenderOrPlural)               // +4
    t.push_back(verb_past_slot(g));
  push_person_series(&t, Tense::Future, true);              // +6
  t.push_back(verb_reserved_slot());                        // +1 = 24
  return t;
}

std::vector<FeatureBundle> make_adverb_slots() {
  FeatureBundle cmp;
  cmp.degree = Degree::Comparative;
  FeatureBundle sup;
  sup.degree = Degree::Superlative;
  return {cmp, sup};  // 2
}

std::vector<FeatureBundle> make_ordinal_slots() {
  std::vector<FeatureBundle> t;
  for (Case c : kAllCases)
    for (Gender g : kAllGenders) {
      FeatureBundle b;
      b.case_ = c;
      b.number = Number::Singular;
      b.gender = g;
      t.push_back(b);
    }
  return t;  // 18
}

std::vector<FeatureBundle> make_cardinal_slots() {
  std::vector<FeatureBundle> t;
  for (Case c : kAllCases) {
    FeatureBundle mi;
    mi.case_ = c;
    mi.gender = Gender::Masculine;
    mi.animacy = Animacy::Inanimate;
    t.push_back(mi);
    FeatureBundle ma = mi;
    ma.animacy = Animacy::Animate;
    t.push_back(ma);
    FeatureBundle f;
    f.case_ = c;
    f.gender = Gender::Feminine;
    t.push_back(f);
    FeatureBundle n;
    n.case_ = c;
    n.gender = Gender::Neuter;
    t.push_back(n);
  }
  return t;  // 24
}

std::vector<FeatureBundle> make_gerund_slots() {
  FeatureBundle perf;
  perf.aspect = Aspect::Perfective;
  FeatureBundle impf;
  impf.aspect = Aspect::Imperfective;
  return {perf, impf};  // 2
}

std::vector<FeatureBundle> make_imperative_slots() {
  FeatureBundle sg;
  sg.number = Number::Singular;
  sg.person = Person::Second;
  FeatureBundle pl;
  pl.number = Number::Plural;
  pl.person = Person::Second;
  return {sg, pl};  // 2
}

}  // namespace

const FeatureBundle& verb_reserved_slot() {
  static const FeatureBundle kReserved = [] {
    FeatureBundle b;
    b.voice = Voice::Passive;
    return b;
  }();
  return kReserved;
}

const std::vector<FeatureBundle>& slot_table(Pos pos) {
  static const std::vector<FeatureBundle> kNoun = make_noun_slots();
  static const std::vector<FeatureBundle> kAdjective = make_adjective_slots();
  static const std::vector<FeatureBundle> kVerb = make_verb_slots();
  static const std::vector<FeatureBundle> kAdverb = make_adverb_slots();
  static const std::vector<FeatureBundle> kOrdinal = make_ordinal_slots();
  static const std::vector<FeatureBundle> kCardinal = make_cardinal_slots();
  static const std::vector<FeatureBundle> kPresAct =
      make_participle_slots(ParticipleKind::PresentActive);
  static const std::vector<FeatureBundle> kPastAct =
      make_participle_slots(ParticipleKind::PastActive);
  static const std::vector<FeatureBundle> kPastPass =
      make_participle_slots(ParticipleKind::PastPassive);
  static const std::vector<FeatureBundle> kGerund = make_gerund_slots();
  static const std::vector<FeatureBundle> kImperative =
      make_imperative_slots();
  switch (pos) {
    case Pos::Noun: return kNoun;
    case Pos::Verb: return kVerb;
    case Pos::Adjective: return kAdjective;
    case Pos::Adverb: return kAdverb;
    case Pos::Ordinal: return kOrdinal;
    case Pos::Cardinal: return kCardinal;
    case Pos::ParticiplePresAct: return kPresAct;
    case Pos::ParticiplePastAct: return kPastAct;
    case Pos::ParticiplePastPass: return kPastPass;
    case Pos::Gerund: return kGerund;
    case Pos::Imperative: return kImperative;
  }
  return kNoun;  // unreachable
}

}  // namespace rumorph
