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

#ifndef RUMORPH_NOUN_HPP_
#define RUMORPH_NOUN_HPP_

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

/// Properties inferred for agreement: grammatical gender, the animacy the
/// engine settled on, and the two paradigm-shape flags.
struct NounTraits {
  Gender gender = Gender::Masculine;
  Animacy animacy = Animacy::Inanimate;
  bool pluralia_tantum = false;
  bool indeclinable = false;
};

/// Classifies a nominative-singular lemma (nominative-plural for pluralia
/// tantum). Purely rule- and table-driven; no dictionary is consulted.
Result<NounTraits> noun_traits(const CyrillicWord& lemma);

/// One case/number form. errc::no_such_form for the singular of a plurale
/// tantum.
Result<CyrillicWord> inflect_noun(const CyrillicWord& lemma, Case c,
                                  Number n);

/// All 12 slots in canonical order (cases x numbers).
Result<Paradigm> noun_paradigm(const CyrillicWord& lemma);

}  // namespace rumorph

#endif  // RUMORPH_NOUN_HPP_
