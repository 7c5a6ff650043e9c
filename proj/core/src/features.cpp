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

#include "rumorph/features.hpp"

#include <sstream>

namespace rumorph {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_russian: return "not-russian";
    case errc::underflow: return "underflow";
    case errc::no_such_form: return "no-such-form";
    case errc::invalid_slot: return "invalid-slot";
    case errc::not_adjective_shaped: return "not-adjective-shaped";
    case errc::range: return "range";
    case errc::malformed_expression: return "malformed-expression";
    case errc::missing_field: return "missing-field";
    case errc::bad_field: return "bad-field";
    case errc::parse: return "parse";
    case errc::empty: return "empty";
    case errc::io: return "io";
  }
  return "unknown";
}

std::string_view name_of(Case v) {
  switch (v) {
    case Case::Nominative: return "nom";
    case Case::Genitive: return "gen";
    case Case::Dative: return "dat";
    case Case::Accusative: return "acc";
    case Case::Instrumental: return "ins";
    case Case::Prepositional: return "prep";
  }
  return "?";
}

std::string_view name_of(Number v) { return v == Number::Singular ? "sg" : "pl"; }

std::string_view name_of(Gender v) {
  switch (v) {
    case Gender::Masculine: return "masc";
    case Gender::Feminine: return "fem";
    case Gender::Neuter: return "neut";
  }
  return "?";
}

std::string_view name_of(Person v) {
  switch (v) {
    case Person::First: return "1";
    case Person::Second: return "2";
    case Person::Third: return "3";
  }
  return "?";
}

std::string_view name_of(Tense v) {
  switch (v) {
    case Tense::Past: return "past";
    case Tense::Present: return "pres";
    case Tense::Future: return "futr";
  }
  return "?";
}

std::string_view name_of(Voice v) { return v == Voice::Active ? "act" : "pass"; }

std::string_view name_of(Animacy v) { return v == Animacy::Animate ? "anim" : "inan"; }

std::string_view name_of(Aspect v) {
  switch (v) {
    case Aspect::Perfective: return "perf";
    case Aspect::Imperfective: return "impf";
    case Aspect::Biaspectual: return "biasp";
  }
  return "?";
}

std::string_view name_of(Degree v) {
  switch (v) {
    case Degree::Positive: return "pos";
    case Degree::Comparative: return "comp";
    case Degree::Superlative: return "supr";
  }
  return "?";
}

std::string_view name_of(ParticipleKind v) {
  switch (v) {
    case ParticipleKind::PresentActive: return "pres-act";
    case ParticipleKind::PastActive: return "past-act";
    case ParticipleKind::PastPassive: return "past-pass";
  }
  return "?";
}

std::string_view name_of(Pos v) {
  switch (v) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adjective: return "adjective";
    case Pos::Adverb: return "adverb";
    case Pos::Ordinal: return "ordinal";
    case Pos::Cardinal: return "cardinal";
    case Pos::ParticiplePresAct: return "prt-pres-act";
    case Pos::ParticiplePastAct: return "prt-past-act";
    case Pos::ParticiplePastPass: return "prt-past-pass";
    case Pos::Gerund: return "gerund";
    case Pos::Imperative: return "imperative";
  }
  return "?";
}

namespace {

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<E, N>& all, std::string_view name) {
  for (E v : all)
    if (name_of(v) == name) return v;
  return std::nullopt;
}

}  // namespace

std::optional<Case> case_from(std::string_view s) { return lookup(kAllCases, s); }
std::optional<Number> number_from(std::string_view s) { return lookup(kAllNumbers, s); }
std::optional<Gender> gender_from(std::string_view s) { return lookup(kAllGenders, s); }
std::optional<Person> person_from(std::string_view s) { return lookup(kAllPersons, s); }

std::optional<Tense> tense_from(std::string_view s) {
  return lookup(std::array{Tense::Past, Tense::Present, Tense::Future}, s);
}
std::optional<Voice> voice_from(std::string_view s) {
  return lookup(std::array{Voice::Active, Voice::Passive}, s);
}
std::optional<Animacy> animacy_from(std::string_view s) {
  return lookup(std::array{Animacy::Animate, Animacy::Inanimate}, s);
}
std::optional<Aspect> aspect_from(std::string_view s) {
  return lookup(std::array{Aspect::Perfective, Aspect::Imperfective, Aspect::Biaspectual}, s);
}
std::optional<Degree> degree_from(std::string_view s) {
  return lookup(std::array{Degree::Positive, Degree::Comparative, Degree::Superlative}, s);
}
std::optional<ParticipleKind> participle_kind_from(std::string_view s) {
  return lookup(
      std::array{ParticipleKind::PresentActive, ParticipleKind::PastActive,
                 ParticipleKind::PastPassive},
      s);
}
std::optional<Pos> pos_from(std::string_view s) {
  // "adj" and "prt" spellings accepted as CLI conveniences.
  if (s == "adj") return Pos::Adjective;
  return lookup(std::array{Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb, Pos::Ordinal,
                           Pos::Cardinal, Pos::ParticiplePresAct, Pos::ParticiplePastAct,
                           Pos::ParticiplePastPass, Pos::Gerund, Pos::Imperative},
                s);
}

std::string FeatureBundle::tag() const {
  std::string out;
  auto put = [&out](std::string_view key, std::string_view val) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += val;
  };
  if (case_) put("case", name_of(*case_));
  if (number) put("num", name_of(*number));
  if (gender) put("gen", name_of(*gender));
  if (person) put("pers", name_of(*person));
  if (tense) put("tense", name_of(*tense));
  if (voice) put("voice", name_of(*voice));
  if (animacy) put("anim", name_of(*animacy));
  if (degree) put("deg", name_of(*degree));
  if (participle) put("kind", name_of(*participle));
  if (aspect) put("asp", name_of(*aspect));
  return out;
}

Result<FeatureBundle> FeatureBundle::from_tag(std::string_view tag) {
  FeatureBundle b;
  std::size_t pos = 0;
  while (pos < tag.size()) {
    std::size_t end = tag.find(';', pos);
    if (end == std::string_view::npos) end = tag.size();
    std::string_view field = tag.substr(pos, end - pos);
    pos = end + 1;
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos)
      return make_error(errc::parse, "bad tag field: " + std::string(field));
    std::string_view key = field.substr(0, eq);
    std::string_view val = field.substr(eq + 1);
    bool known = true;
    if (key == "case") {
      b.case_ = case_from(val);
      known = b.case_.has_value();
    } else if (key == "num") {
      b.number = number_from(val);
      known = b.number.has_value();
    } else if (key == "gen") {
      b.gender = gender_from(val);
      known = b.gender.has_value();
    } else if (key == "pers") {
      b.person = person_from(val);
      known = b.person.has_value();
    } else if (key == "tense") {
      b.tense = tense_from(val);
      known = b.tense.has_value();
    } else if (key == "voice") {
      b.voice = voice_from(val);
      known = b.voice.has_value();
    } else if (key == "anim") {
      b.animacy = animacy_from(val);
      known = b.animacy.has_value();
    } else if (key == "deg") {
      b.degree = degree_from(val);
      known = b.degree.has_value();
    } else if (key == "kind") {
      b.participle = participle_kind_from(val);
      known = b.participle.has_value();
    } else if (key == "asp") {
      b.aspect = aspect_from(val);
      known = b.aspect.has_value();
    } else {
      known = false;
    }
    if (!known) return make_error(errc::parse, "bad tag field: " + std::string(field));
  }
  return b;
}

FeatureBundle noun_slot(Case c, Number n) {
  FeatureBundle b;
  b.case_ = c;
  b.number = n;
  return b;
}

FeatureBundle adjective_long_slot(Case c, GenderOrPlural g) {
  FeatureBundle b;
  b.case_ = c;
  if (g == GenderOrPlural::Plural) {
    b.number = Number::Plural;
  } else {
    b.number = Number::Singular;
    b.gender = g == GenderOrPlural::Masculine  ? Gender::Masculine
               : g == GenderOrPlural::Feminine ? Gender::Feminine
                                               : Gender::Neuter;
  }
  return b;
}

FeatureBundle adjective_short_slot(GenderOrPlural g) {
  FeatureBundle b = adjective_long_slot(Case::Nominative, g);
  b.case_ = std::nullopt;  // caselessness marks the short form
  return b;
}

FeatureBundle verb_present_slot(Person p, Number n) {
  FeatureBundle b;
  b.tense = Tense::Present;
  b.person = p;
  b.number = n;
  return b;
}

FeatureBundle verb_future_slot(Person p, Number n) {
  FeatureBundle b = verb_present_slot(p, n);
  b.tense = Tense::Future;
  return b;
}

FeatureBundle verb_future_analytic_slot(Person p, Number n) {
  // The imperfective-reading analytic future; the aspect marker keeps the
  // slot key distinct from the primary future slot.
  FeatureBundle b = verb_future_slot(p, n);
  b.aspect = Aspect::Imperfective;
  return b;
}

FeatureBundle verb_past_slot(GenderOrPlural g) {
  FeatureBundle b;
  b.tense = Tense::Past;
  if (g == GenderOrPlural::Plural) {
    b.number = Number::Plural;
  } else {
    b.number = Number::Singular;
    b.gender = g == GenderOrPlural::Masculine  ? Gender::Masculine
               : g == GenderOrPlural::Feminine ? Gender::Feminine
                                               : Gender::Neuter;
  }
  return b;
}

FeatureBundle infinitive_slot() { return FeatureBundle{}; }

}  // namespace rumorph
