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

#ifndef RUMORPH_PARADIGM_HPP_
#define RUMORPH_PARADIGM_HPP_

#include <optional>
#include <vector>

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"

namespace rumorph {

/// Ordered slot list of one lexeme. Slot order and count are fixed per
/// paradigm family (see slot_table); a slot the lexeme cannot realize keeps
/// its key but carries an absent form, so cardinality stays testable.
struct Paradigm {
  struct Slot {
    FeatureBundle features;
    std::optional<CyrillicWord> form;  // nullopt marks an absent form
  };

  CyrillicWord lemma;
  Pos pos = Pos::Noun;
  std::vector<Slot> slots;

  const Slot* find(const FeatureBundle& key) const {
    for (const Slot& s : slots)
      if (s.features == key) return &s;
    return nullptr;
  }

  std::size_t size() const { return slots.size(); }

  std::size_t realized_count() const {
    std::size_t n = 0;
    for (const Slot& s : slots)
      if (s.form) ++n;
    return n;
  }
};

/// The frozen slot table of a paradigm family, in canonical order.
///
/// Families and counts: noun 12 (6 cases x 2 numbers, case-major),
/// adjective 28 (24 long: case-major x {m,f,n,pl}; then 4 caseless short),
/// verb 24 (infinitive; present 6; future 6; past 4; analytic future 6,
/// keyed with an extra asp=impf marker; one reserved passive slot that no
/// verb realizes), adverb 2 (comparative, superlative), ordinal 18
/// (6 cases x 3 genders), cardinal 24 (6 cases x {masc inan, masc anim,
/// fem, neut}), each participle kind 28 (as adjective, kind-tagged),
/// gerund 2 (perfective, imperfective), imperative 2 (sg, pl).
const std::vector<FeatureBundle>& slot_table(Pos pos);

/// Bundle of the reserved verb slot (kept absent by construction).
const FeatureBundle& verb_reserved_slot();

}  // namespace rumorph

#endif  // RUMORPH_PARADIGM_HPP_
