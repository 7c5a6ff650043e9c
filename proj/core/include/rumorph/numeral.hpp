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

#ifndef RUMORPH_NUMERAL_HPP_
#define RUMORPH_NUMERAL_HPP_

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

// Fully inflected cardinal phrase for 0..9999; every component word takes
// the requested case. Gender reaches only the один/одна/одно and два/две
// components; animacy only the accusative of a final 1..4 component.
// Thousands obey quantity government: две тысячи, пять тысяч, двум тысячам.
Result<CyrillicWord> cardinal(int value, Case c, Gender g, Animacy a);

// Ordinal phrase: leading components stay cardinal nominative, the final
// component is an ordinal word declined as an adjective.
Result<CyrillicWord> ordinal(int value, GenderOrPlural g, Case c, Animacy a);

// Nominative masculine lemma of the final ordinal word (первый, сотый).
Result<CyrillicWord> ordinal_lemma(int value);

// Value of a single nominative cardinal word (два -> 2, сорок -> 40,
// тысяча -> 1000); nullopt for anything else.
std::optional<int> cardinal_value(const CyrillicWord& word);

// Value of a single ordinal lemma (третий -> 3, сороковой -> 40);
// nullopt for anything else.
std::optional<int> ordinal_value(const CyrillicWord& word);

// Frozen 24-slot cardinal paradigm: 6 cases x {masc inanimate, masc
// animate, feminine, neuter}.
Result<Paradigm> cardinal_paradigm(int value);

// Frozen 18-slot ordinal paradigm: 6 cases x 3 genders, inanimate reading.
Result<Paradigm> ordinal_paradigm(int value);

}  // namespace rumorph

#endif  // RUMORPH_NUMERAL_HPP_
