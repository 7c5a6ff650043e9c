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

#ifndef RUMORPH_VERB_HPP_
#define RUMORPH_VERB_HPP_

#include "rumorph/cyrillic.hpp"
#include "rumorph/features.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

// Aspect detection by prefix/suffix heuristics plus the biaspectual list.
// The result drives which of the 24 verb slots are realizable.
Result<Aspect> get_perfectness(const CyrillicWord& infinitive);

// One finite form. Present/future slots need person+number, past slots
// gender-or-plural; the empty bundle names the infinitive itself. Plain
// future slots surface synthetically for perfective verbs and analytically
// ("буду" + infinitive) for imperfective ones; the aspect-marked future
// slots are the analytic series and exist only for imperfective readings.
Result<CyrillicWord> conjugate(const CyrillicWord& infinitive,
                               const FeatureBundle& features);

// The frozen 24-slot table. Unrealizable slots stay unrealized; they are
// never dropped.
Result<Paradigm> verb_paradigm(const CyrillicWord& infinitive);

// Imperative pair; plural adds "те" before any reflexive suffix.
Result<CyrillicWord> imperative(const CyrillicWord& infinitive, Number n);
Result<Paradigm> imperative_paradigm(const CyrillicWord& infinitive);

// The perfective gerund applies to any verb shape (решать -> решав);
// the imperfective gerund exists only for imperfective readings.
Result<CyrillicWord> perfective_gerund(const CyrillicWord& infinitive);
Result<CyrillicWord> imperfective_gerund(const CyrillicWord& infinitive);
Result<Paradigm> gerund_paradigm(const CyrillicWord& infinitive);

// Nominative-singular-masculine lemma of a participle.
Result<CyrillicWord> participle_lemma(const CyrillicWord& infinitive,
                                      ParticipleKind kind);

// One declined participle form; declension delegates to the adjective
// engine. Only the passive kind realizes the four short slots.
Result<CyrillicWord> participle(const CyrillicWord& infinitive,
                                ParticipleKind kind, GenderOrPlural g, Case c,
                                Animacy animacy);

// Short passive participle (решен, решена); errc::no_such_form for verbs
// without a passive participle.
Result<CyrillicWord> participle_short(const CyrillicWord& infinitive,
                                      GenderOrPlural g);

// 28-slot participle paradigm for one kind.
Result<Paradigm> participle_paradigm(const CyrillicWord& infinitive,
                                     ParticipleKind kind);

}  // namespace rumorph

#endif  // RUMORPH_VERB_HPP_
