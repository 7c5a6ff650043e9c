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

#ifndef RUMORPH_VARIABILITY_HPP_
#define RUMORPH_VARIABILITY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rumorph/corpus.hpp"
#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

/// Levenshtein edit distance over Unicode characters: minimal number of
/// single-character insertions, deletions and substitutions (unit costs).
int levenshtein(std::u32string_view a, std::u32string_view b);
int levenshtein(const CyrillicWord& a, const CyrillicWord& b);

/// Morphological variability of one form list: the sum of Levenshtein
/// distances over all unordered pairs i < j. The ordered-pair reading would
/// exactly double every score and sort identically; the unordered sum is
/// used throughout. Absent paradigm slots must be excluded by the caller,
/// not passed as empty strings.
Result<std::int64_t> variability_score(const std::vector<CyrillicWord>& forms);

struct VariabilityRecord {
  CyrillicWord lemma;
  Pos pos = Pos::Noun;
  std::size_t form_count = 0;
  std::int64_t score = 0;  // 0 iff all forms identical
};

struct VariabilityCurve {
  std::vector<VariabilityRecord> records;  // ascending score, ties by lemma
  std::size_t skipped = 0;                 // lexemes the generator rejected
};

/// Produces the full engine form list for one lemma of a POS; the default
/// generator realizes the engine paradigm (for verbs: conjugation,
/// imperative, gerunds and all three participle paradigms).
using FormGenerator =
    std::function<Result<std::vector<CyrillicWord>>(const CyrillicWord&)>;

FormGenerator default_form_generator(Pos pos);

/// Scores every lexeme of `pos` in the lexicon and sorts ascending by
/// score. Lexemes the generator rejects are dropped and counted.
Result<VariabilityCurve> variability_curve(const Lexicon& lexicon, Pos pos,
                                           FormGenerator generator = {});

/// CSV export, ascending score order: "lemma,pos,form_count,score".
std::string curve_csv(const VariabilityCurve& curve);

}  // namespace rumorph

#endif  // RUMORPH_VARIABILITY_HPP_
