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

#ifndef RUMORPH_TABLES_HPP_
#define RUMORPH_TABLES_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

/// Hand-entered conjugation of a verb the suffix rules cannot reach.
/// The personal series holds present forms for imperfectives and synthetic
/// future forms for perfectives; `synthetic_future` marks the odd
/// imperfective whose series is nevertheless a future one.
struct IrregularVerb {
  std::array<std::optional<std::u32string>, 6> personal;  // 1sg..3sg,1pl..3pl
  std::array<std::optional<std::u32string>, 4> past;      // m f n pl
  std::array<std::optional<std::u32string>, 2> imperative;
  std::optional<Aspect> aspect;
  std::optional<std::u32string> iger;       // imperfective gerund
  std::optional<std::u32string> pger;       // perfective gerund
  std::optional<std::u32string> pres_act;   // participle, nom sg masc
  std::optional<std::u32string> past_act;
  std::optional<std::u32string> past_pass;
  bool no_imperative = false;
  bool no_iger = false;
  bool no_pger = false;
  bool synthetic_future = false;
};

/// Exception tables backing the rule engine. A builtin snapshot is linked
/// into the library; load_exception_dir() overlays files of the same names
/// from disk. Set keys and map keys are normalized lemmas.
struct Tables {
  using Set = std::unordered_set<std::u32string>;

  // Nouns.
  Set indeclinable;                                        // indeclinable.txt
  Set animate;                                             // animate.txt
  std::unordered_map<std::u32string, std::optional<std::u32string>>
      pluralia;                                            // pluralia.txt
  Set plural_a;                                            // plural-a.txt
  Set fleeting;                                            // fleeting-nouns.txt
  Set nonfleeting;                                         // non-fleeting.txt
  Set sibilant_stressed;                                   // sibilant-stressed.txt
  Set adjectival_nouns;                                    // adjectival-nouns.txt
  std::unordered_map<std::u32string, Gender> gender_overrides;
  std::unordered_map<std::u32string,
                     std::array<std::optional<std::u32string>, 12>>
      irregular_nouns;                                     // irregular-nouns.tsv

  // Adjectives and adverbs.
  Set indeclinable_adjectives;                             // indeclinable-adjectives.txt
  Set short_form_skip;                                     // short-form-skip.txt
  Set possessive_soft;                                     // possessive-adjectives.txt
  std::unordered_map<std::u32string, std::array<std::u32string, 4>>
      short_overrides;                                     // short-overrides.tsv
  std::unordered_map<std::u32string, std::u32string>
      suppletive_adverbs;                                  // suppletive-adverbs.tsv

  // Verbs.
  std::unordered_map<std::u32string, IrregularVerb>
      irregular_verbs;                                     // irregular-verbs.tsv
  Set no_gerund;                                           // no-gerund.txt
  Set biaspectual;                                         // biaspectual.txt
  Set no_imperative;                                       // no-imperative.txt
  Set second_conj;                                         // second-conjugation.txt
  Set perfective_simple;                                   // perfective-simple.txt
  Set imperfective_prefixed;                               // imperfective-prefixed.txt
  Set imperative_soft;                                     // imperative-soft.txt
  Set nu_imperfective;                                     // nu-imperfective.txt
  Set nu_drop_past;                                        // nu-drop-past.txt
  Set motion_iterative;                                    // motion-iterative.txt
  Set t_shch;                                              // t-shch-verbs.txt
  std::unordered_map<std::u32string, std::u32string>
      mutating_stems;                                      // mutating-verbs.tsv
  std::unordered_map<std::u32string, std::u32string>
      velar_stems;                                         // velar-verbs.tsv
  std::unordered_map<std::u32string, std::u32string> ti_stems;  // ti-verbs.tsv

  /// Parses a full table set from file contents keyed by file name.
  /// Missing files leave the matching members empty; malformed lines
  /// produce errc::parse with file and line in the message.
  static Result<Tables> from_sources(
      const std::map<std::string, std::string>& sources);

  /// Tables compiled into the library.
  static const Tables& builtin();
};

/// Currently active tables, builtin unless load_exception_dir() succeeded.
const Tables& active_tables();

/// Replaces the active tables with builtin data overlaid by any known file
/// found under `dir`. Returns the number of files read. Not thread safe;
/// call during startup only.
Result<std::size_t> load_exception_dir(const std::string& dir);

/// Restores the builtin tables (used by tests).
void reset_tables();

namespace detail {
/// Builtin file contents captured at build time, keyed by file name.
const std::map<std::string, std::string_view>& builtin_data();
}  // namespace detail

}  // namespace rumorph

#endif  // RUMORPH_TABLES_HPP_
