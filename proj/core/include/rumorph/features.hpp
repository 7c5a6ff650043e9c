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

#ifndef RUMORPH_FEATURES_HPP_
#define RUMORPH_FEATURES_HPP_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "rumorph/result.hpp"

namespace rumorph {

// Canonical orders below are load-bearing: paradigm slot tables and the
// tag-string serialization both iterate enumerators in declaration order.

enum class Case { Nominative, Genitive, Dative, Accusative, Instrumental, Prepositional };
enum class Number { Singular, Plural };
enum class Gender { Masculine, Feminine, Neuter };
enum class Person { First, Second, Third };
enum class Tense { Past, Present, Future };
enum class Voice { Active, Passive };
enum class Animacy { Animate, Inanimate };
enum class Aspect { Perfective, Imperfective, Biaspectual };
enum class Degree { Positive, Comparative, Superlative };
enum class ParticipleKind { PresentActive, PastActive, PastPassive };

inline constexpr std::array<Case, 6> kAllCases = {
    Case::Nominative,   Case::Genitive,      Case::Dative,
    Case::Accusative,   Case::Instrumental,  Case::Prepositional};
inline constexpr std::array<Number, 2> kAllNumbers = {Number::Singular, Number::Plural};
inline constexpr std::array<Gender, 3> kAllGenders = {Gender::Masculine, Gender::Feminine,
                                                      Gender::Neuter};
inline constexpr std::array<Person, 3> kAllPersons = {Person::First, Person::Second,
                                                      Person::Third};

/// Agreement target for adjective-like declension: a singular gender or plural.
enum class GenderOrPlural { Masculine, Feminine, Neuter, Plural };

inline constexpr std::array<GenderOrPlural, 4> kAllGenderOrPlural = {
    GenderOrPlural::Masculine, GenderOrPlural::Feminine, GenderOrPlural::Neuter,
    GenderOrPlural::Plural};

inline GenderOrPlural to_gender_or_plural(Gender g) {
  switch (g) {
    case Gender::Masculine: return GenderOrPlural::Masculine;
    case Gender::Feminine: return GenderOrPlural::Feminine;
    default: return GenderOrPlural::Neuter;
  }
}

std::string_view name_of(Case v);
std::string_view name_of(Number v);
std::string_view name_of(Gender v);
std::string_view name_of(Person v);
std::string_view name_of(Tense v);
std::string_view name_of(Voice v);
std::string_view name_of(Animacy v);
std::string_view name_of(Aspect v);
std::string_view name_of(Degree v);
std::string_view name_of(ParticipleKind v);

std::optional<Case> case_from(std::string_view name);
std::optional<Number> number_from(std::string_view name);
std::optional<Gender> gender_from(std::string_view name);
std::optional<Person> person_from(std::string_view name);
std::optional<Tense> tense_from(std::string_view name);
std::optional<Voice> voice_from(std::string_view name);
std::optional<Animacy> animacy_from(std::string_view name);
std::optional<Aspect> aspect_from(std::string_view name);
std::optional<Degree> degree_from(std::string_view name);
std::optional<ParticipleKind> participle_kind_from(std::string_view name);

/// One paradigm slot: the set of grammatical category values that identifies
/// a surface form. Absent optionals mean the category does not apply to the
/// slot (an entirely empty bundle keys the infinitive).
struct FeatureBundle {
  std::optional<Case> case_;
  std::optional<Number> number;
  std::optional<Gender> gender;
  std::optional<Person> person;
  std::optional<Tense> tense;
  std::optional<Voice> voice;
  std::optional<Animacy> animacy;
  std::optional<Degree> degree;
  std::optional<ParticipleKind> participle;
  std::optional<Aspect> aspect;

  bool operator==(const FeatureBundle&) const = default;

  bool empty() const {
    return !case_ && !number && !gender && !person && !tense && !voice && !animacy && !degree &&
           !participle && !aspect;
  }

  /// Canonical tag string, e.g. "case=gen;num=sg". Field order is fixed;
  /// absent features are omitted; the empty bundle serializes to "".
  std::string tag() const;

  static Result<FeatureBundle> from_tag(std::string_view tag);
};

// Shorthand constructors for the common slot shapes.
FeatureBundle noun_slot(Case c, Number n);
FeatureBundle adjective_long_slot(Case c, GenderOrPlural g);
FeatureBundle adjective_short_slot(GenderOrPlural g);
FeatureBundle verb_present_slot(Person p, Number n);
FeatureBundle verb_future_slot(Person p, Number n);
FeatureBundle verb_future_analytic_slot(Person p, Number n);
FeatureBundle verb_past_slot(GenderOrPlural g);
FeatureBundle infinitive_slot();

/// The paradigm families the engine generates, one per evaluation row.
enum class Pos {
  Noun,
  Verb,
  Adjective,
  Adverb,
  Ordinal,
  Cardinal,
  ParticiplePresAct,
  ParticiplePastAct,
  ParticiplePastPass,
  Gerund,
  Imperative,
};

std::string_view name_of(Pos v);
std::optional<Pos> pos_from(std::string_view name);

}  // namespace rumorph

#endif  // RUMORPH_FEATURES_HPP_
