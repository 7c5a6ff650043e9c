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

#include "rumorph/variability.hpp"

#include <algorithm>
#include <numeric>

#include "rumorph/adjective.hpp"
#include "rumorph/evaluate.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/verb.hpp"

namespace rumorph {

int levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Two-row DP over the shorter string.
  std::vector<int> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int next = std::min({row[j] + 1, row[j - 1] + 1,
                           diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

int levenshtein(const CyrillicWord& a, const CyrillicWord& b) {
  return levenshtein(std::u32string_view(a.chars()),
                     std::u32string_view(b.chars()));
}

Result<std::int64_t> variability_score(
    const std::vector<CyrillicWord>& forms) {
  if (forms.empty()) return make_error(errc::empty, "no forms to score");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      total += levenshtein(forms[i], forms[j]);
  return total;
}

namespace {

void append_realized(const Paradigm& p, std::vector<CyrillicWord>* out) {
  for (const Paradigm::Slot& s : p.slots)
    if (s.form) out->push_back(*s.form);
}

Result<std::vector<CyrillicWord>> paradigm_forms(Result<Paradigm> p) {
  if (!p.ok()) return p.error();
  std::vector<CyrillicWord> out;
  append_realized(*p, &out);
  return out;
}

// Whole verb family: conjugation, imperative, gerunds, participles.
// Participle and gerund paradigms with no realizable slots contribute
// nothing rather than failing the verb.
Result<std::vector<CyrillicWord>> verb_family_forms(const CyrillicWord& v) {
  Result<Paradigm> conj = verb_paradigm(v);
  if (!conj.ok()) return conj.error();
  std::vector<CyrillicWord> out;
  append_realized(*conj, &out);
  if (Result<Paradigm> p = imperative_paradigm(v); p.ok())
    append_realized(*p, &out);
  if (Result<Paradigm> p = gerund_paradigm(v); p.ok())
    append_realized(*p, &out);
  for (ParticipleKind k :
       {ParticipleKind::PresentActive, ParticipleKind::PastActive,
        ParticipleKind::PastPassive}) {
    if (Result<Paradigm> p = participle_paradigm(v, k); p.ok())
      append_realized(*p, &out);
  }
  return out;
}

}  // namespace

FormGenerator default_form_generator(Pos pos) {
  switch (pos) {
    case Pos::Noun:
      return [](const CyrillicWord& w) {
        return paradigm_forms(noun_paradigm(w));
      };
    case Pos::Adjective:
      return [](const CyrillicWord& w) {
        return paradigm_forms(adjective_paradigm(w));
      };
    case Pos::Adverb:
      return [](const CyrillicWord& w) {
        return paradigm_forms(adverb_paradigm(w));
      };
    case Pos::Verb:
      return verb_family_forms;
    case Pos::Imperative:
      return [](const CyrillicWord& w) {
        return paradigm_forms(imperative_paradigm(w));
      };
    case Pos::Gerund:
      return [](const CyrillicWord& w) {
        return paradigm_forms(gerund_paradigm(w));
      };
    case Pos::ParticiplePresAct:
      return [](const CyrillicWord& w) {
        return paradigm_forms(
            participle_paradigm(w, ParticipleKind::PresentActive));
      };
    case Pos::ParticiplePastAct:
      return [](const CyrillicWord& w) {
        return paradigm_forms(
            participle_paradigm(w, ParticipleKind::PastActive));
      };
    case Pos::ParticiplePastPass:
      return [](const CyrillicWord& w) {
        return paradigm_forms(
            participle_paradigm(w, ParticipleKind::PastPassive));
      };
    case Pos::Cardinal:
      return [](const CyrillicWord& w) -> Result<std::vector<CyrillicWord>> {
        std::optional<int> v = cardinal_value(w);
        if (!v) return make_error(errc::range, "not a cardinal lemma");
        return paradigm_forms(cardinal_paradigm(*v));
      };
    case Pos::Ordinal:
      return [](const CyrillicWord& w) -> Result<std::vector<CyrillicWord>> {
        std::optional<int> v = ordinal_value(w);
        if (!v) return make_error(errc::range, "not an ordinal lemma");
        return paradigm_forms(ordinal_paradigm(*v));
      };
  }
  return {};
}

Result<VariabilityCurve> variability_curve(const Lexicon& lexicon, Pos pos,
                                           FormGenerator generator) {
  if (!generator) generator = default_form_generator(pos);
  if (!generator)
    return make_error(errc::invalid_slot, "no generator for this POS");

  VariabilityCurve curve;
  for (const CorpusLexeme* l : pos_roots(lexicon, pos)) {
    Result<std::vector<CyrillicWord>> forms = generator(l->lemma);
    if (!forms.ok()) {
      ++curve.skipped;
      continue;
    }
    Result<std::int64_t> score = variability_score(*forms);
    if (!score.ok()) {
      ++curve.skipped;
      continue;
    }
    VariabilityRecord rec;
    rec.lemma = l->lemma;
    rec.pos = pos;
    rec.form_count = forms->size();
    rec.score = *score;
    curve.records.push_back(std::move(rec));
  }
  std::sort(curve.records.begin(), curve.records.end(),
            [](const VariabilityRecord& a, const VariabilityRecord& b) {
              if (a.score != b.score) return a.score < b.score;
              return a.lemma.chars() < b.lemma.chars();
            });
  return curve;
}

std::string curve_csv(const VariabilityCurve& curve) {
  std::string out = "lemma,pos,form_count,score\n";
  for (const VariabilityRecord& r : curve.records) {
    out += r.lemma.str();
    out += ',';
    out += name_of(r.pos);
    out += ',';
    out += std::to_string(r.form_count);
    out += ',';
    out += std::to_string(r.score);
    out += '\n';
  }
  return out;
}

}  // namespace rumorph
