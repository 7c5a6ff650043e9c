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

#ifndef RUMORPH_AGREEMENT_HPP_
#define RUMORPH_AGREEMENT_HPP_

#include <optional>
#include <string_view>

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

// Adjective + noun phrase: the adjective copies the noun's inferred gender
// and animacy and the requested case/number.
Result<CyrillicWord> agree_adjective_noun(const CyrillicWord& adjective,
                                          const CyrillicWord& noun, Case c,
                                          Number n);

// Pronoun + verb: past tense agrees in gender/number (gender required in
// the singular), other tenses in person/number. The pronoun follows person
// and number; gender picks among он/она/оно in the third singular.
Result<CyrillicWord> agree_verb_pronoun(const CyrillicWord& verb, Person p,
                                        Number n, std::optional<Gender> g,
                                        Tense t);

// Numeral + counted noun under quantity government. Direct cases follow the
// paucal buckets of n mod 10 / n mod 100 (1 -> nominative singular, 2..4 ->
// genitive singular, else genitive plural); oblique cases put both parts in
// the requested case, the noun plural unless n ends in 1 (and not 11).
Result<CyrillicWord> quantity_phrase(int n, const CyrillicWord& noun, Case c);

// Verbalizes an arithmetic formula over integers 0..9999 with + - * / = and
// parentheses. Literals read as nominative masculine cardinals; a bare
// literal right of = takes the dative that равно governs.
Result<CyrillicWord> formula_to_text(std::string_view expr);

}  // namespace rumorph

#endif  // RUMORPH_AGREEMENT_HPP_
