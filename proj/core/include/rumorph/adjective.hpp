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

#ifndef RUMORPH_ADJECTIVE_HPP_
#define RUMORPH_ADJECTIVE_HPP_

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

// True when the lemma carries a declinable adjective ending
// (-ый/-ий/-ой, optionally reflexive -ся).
bool adjective_shaped(const CyrillicWord& lemma);

// One long or short form. A bundle with a case selects the long form for
// that case/number/gender; a caseless bundle selects the short form.
// bundle.animacy resolves the accusative for masculine and plural slots
// (inanimate when unset).
Result<CyrillicWord> inflect_adjective(const CyrillicWord& lemma,
                                       const FeatureBundle& features);

// Full 28-slot paradigm: 24 long forms and 4 short forms. Short slots stay
// unrealized for adjectives that do not form them.
Result<Paradigm> adjective_paradigm(const CyrillicWord& lemma);

struct AdverbDegrees {
  CyrillicWord comparative;
  CyrillicWord superlative;  // analytic: comparative + "всего"
};

// Degrees of comparison for a qualitative adverb in -о/-е.
Result<AdverbDegrees> adverb_degrees(const CyrillicWord& adverb);

// Two-slot paradigm (comparative, superlative).
Result<Paradigm> adverb_paradigm(const CyrillicWord& adverb);

}  // namespace rumorph

#endif  // RUMORPH_ADJECTIVE_HPP_
