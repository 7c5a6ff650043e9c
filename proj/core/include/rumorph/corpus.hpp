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

#ifndef RUMORPH_CORPUS_HPP_
#define RUMORPH_CORPUS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

/// Dictionary word classes distinguished by the OpenCorpora POS grammemes
/// the engine understands. Finite verb, infinitive, participle, and gerund
/// lexemes are separate entries tied together by links.
enum class CorpusPos {
  Noun,             // NOUN
  Verb,             // VERB (finite forms)
  Infinitive,       // INFN
  AdjectiveFull,    // ADJF
  AdjectiveShort,   // ADJS
  ParticipleFull,   // PRTF
  ParticipleShort,  // PRTS
  Gerund,           // GRND
  Numeral,          // NUMR
  Adverb,           // ADVB
  Comparative,      // COMP
};

std::string_view name_of(CorpusPos p);

/// One dictionary form: surface string plus its mapped grammemes. Grammemes
/// without an internal mapping are kept as opaque flags and make the form
/// incomparable (it still counts for form statistics).
struct CorpusForm {
  CyrillicWord form;
  FeatureBundle bundle;
  bool imperative = false;           // MOod impr
  std::vector<std::string> flags;    // unmapped grammemes, sorted
  bool comparable = true;

  bool operator==(const CorpusForm&) const = default;
};

struct CorpusLexeme {
  int id = 0;
  CyrillicWord lemma;
  CorpusPos pos = CorpusPos::Noun;
  FeatureBundle lemma_bundle;        // lemma-level mapped grammemes
  std::vector<std::string> lemma_flags;
  bool comparable = true;            // false if lemma carries opaque flags
  std::vector<CorpusForm> forms;

  bool operator==(const CorpusLexeme&) const = default;
};

struct CorpusLink {
  int id = 0;
  int from = 0;
  int to = 0;
  int type = 0;

  bool operator==(const CorpusLink&) const = default;
};

/// Parsed dictionary. Lexeme order follows the source document.
struct Lexicon {
  std::vector<CorpusLexeme> lexemes;
  std::vector<CorpusLink> links;
  std::size_t skipped_lexemes = 0;  // unknown POS or unparseable lemma
  std::size_t skipped_forms = 0;

  const CorpusLexeme* by_id(int id) const;
  std::vector<const CorpusLexeme*> of_pos(CorpusPos p) const;

  /// Lexemes linked from `id` (usually paradigm satellites: the finite,
  /// participle, and gerund lexemes of an infinitive).
  std::vector<const CorpusLexeme*> linked_from(int id) const;

  bool operator==(const Lexicon& other) const {
    return lexemes == other.lexemes && links == other.links;
  }

  void rebuild_index();

 private:
  std::unordered_map<int, std::size_t> index_;
};

/// Streaming parse of the OpenCorpora dictionary XML export. Malformed
/// markup yields errc::parse with the byte offset; lexemes with an unknown
/// POS or an unparseable lemma are skipped and counted.
Result<Lexicon> ingest_opencorpora(std::string_view xml);

/// File variant; transparently inflates gzip-compressed dumps.
Result<Lexicon> ingest_opencorpora_file(const std::string& path);

/// Re-serializes a Lexicon in the dictionary format. Re-ingesting the
/// output reproduces the Lexicon exactly (ingestion is lossless modulo
/// normalization).
std::string write_opencorpora(const Lexicon& lexicon);

}  // namespace rumorph

#endif  // RUMORPH_CORPUS_HPP_
