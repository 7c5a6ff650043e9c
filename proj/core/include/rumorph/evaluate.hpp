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

#ifndef RUMORPH_EVALUATE_HPP_
#define RUMORPH_EVALUATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rumorph/corpus.hpp"
#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

/// Evaluation subset: all lexemes, or `limit` of them drawn with the seeded
/// generator (deterministic for a fixed seed).
struct SampleSpec {
  std::optional<std::size_t> limit;
  std::uint64_t seed = 0;
};

struct Discrepancy {
  int lexeme_id = 0;
  CyrillicWord lemma;
  std::string slot_tag;   // canonical bundle tag of the compared slot
  std::string expected;   // corpus variants, |-joined
  std::string produced;   // engine output, empty when the engine had no form
};

/// Per-POS agreement against the dictionary. forms_compared counts compared
/// slots; corpus-absent slots never enter the denominator, engine failures
/// count as mismatches.
struct AgreementReport {
  Pos pos = Pos::Noun;
  std::size_t words = 0;
  std::size_t forms_compared = 0;
  std::size_t matches = 0;
  double total_ms = 0;
  std::vector<Discrepancy> discrepancies;

  double rate() const {
    return forms_compared == 0
               ? 100.0
               : 100.0 * static_cast<double>(matches) /
                     static_cast<double>(forms_compared);
  }
  double per_word_ms() const {
    return words == 0 ? 0 : total_ms / static_cast<double>(words);
  }
};

/// Lexemes an evaluation of `pos` walks: the POS's own lexemes for nouns,
/// adjectives and adverbs; numeral lexemes the engine recognizes for
/// cardinals and ordinals; infinitive lexemes for every verb-family POS.
std::vector<const CorpusLexeme*> pos_roots(const Lexicon& lexicon, Pos pos);

/// Runs the engine over every sampled lexeme of `pos` and scores slot-level
/// string agreement. Verb-family POS (verb, participles, gerund,
/// imperative) walk infinitive lexemes and their linked satellites.
Result<AgreementReport> evaluate_pos(const Lexicon& lexicon, Pos pos,
                                     const SampleSpec& sample = {});

/// Counting mode for avg_form_count.
enum class Counting {
  DistinctStrings,  // distinct surface strings per lexeme family
  TaggedSlots,      // distinct (form, grammeme-tag) slots
};

/// Mean per-lexeme form count for a POS. Verb families aggregate the
/// infinitive with its linked finite/participle/gerund lexemes, adjectives
/// with their linked short forms.
Result<double> avg_form_count(const Lexicon& lexicon, Pos pos, Counting mode);

/// Known-bad corpus entries, by lexeme id or lemma (one per line, '#'
/// comments allowed).
struct Errata {
  std::unordered_set<int> ids;
  std::unordered_set<std::string> lemmas;

  static Result<Errata> parse(std::string_view text);
  bool contains(int id, const CyrillicWord& lemma) const;
  bool empty() const { return ids.empty() && lemmas.empty(); }
};

/// Removes discrepancies on errata lexemes from the comparison set and
/// recomputes the report. Matches are untouched, so the rate never drops.
AgreementReport errata_filter(const AgreementReport& report,
                              const Errata& errata);

/// Human-readable one-line table row for a report.
std::string report_table(const AgreementReport& report);

/// Discrepancy list as CSV: lemma,slot,expected,produced.
std::string discrepancy_csv(const AgreementReport& report);

}  // namespace rumorph

#endif  // RUMORPH_EVALUATE_HPP_
