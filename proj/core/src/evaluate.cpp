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

#include "rumorph/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rumorph/adjective.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/verb.hpp"

namespace rumorph {

namespace {

// Slot key -> corpus variants filed under it. One key, one comparison.
using SlotMap = std::map<std::string, std::set<std::string>>;

void file_variant(SlotMap* slots, std::string tag, const CyrillicWord& form) {
  (*slots)[std::move(tag)].insert(form.str());
}

std::optional<GenderOrPlural> bundle_gop(const FeatureBundle& b) {
  if (b.number == Number::Plural) return GenderOrPlural::Plural;
  if (b.number == Number::Singular && b.gender)
    return to_gender_or_plural(*b.gender);
  return std::nullopt;
}

// Long adjective-like slot bundle from corpus grammemes, or nullopt when
// the form lacks the categories the engine slot needs.
std::optional<FeatureBundle> long_adj_bundle(const FeatureBundle& corpus) {
  if (!corpus.case_) return std::nullopt;
  std::optional<GenderOrPlural> g = bundle_gop(corpus);
  if (!g) return std::nullopt;
  FeatureBundle b = adjective_long_slot(*corpus.case_, *g);
  b.animacy = corpus.animacy;
  return b;
}

const CorpusLexeme* first_linked(const Lexicon& lex, int id, CorpusPos pos) {
  for (const CorpusLexeme* s : lex.linked_from(id))
    if (s->pos == pos) return s;
  return nullptr;
}

std::vector<const CorpusLexeme*> all_linked(const Lexicon& lex, int id,
                                            CorpusPos pos) {
  std::vector<const CorpusLexeme*> out;
  for (const CorpusLexeme* s : lex.linked_from(id))
    if (s->pos == pos) out.push_back(s);
  return out;
}

// Participle kind of a PRTF/PRTS lexeme, read from its first form carrying
// tense and voice (the lemma bundle often lacks them).
std::optional<ParticipleKind> participle_kind_of(const CorpusLexeme& l) {
  auto kind_from = [](const FeatureBundle& b) -> std::optional<ParticipleKind> {
    if (!b.tense || !b.voice) return std::nullopt;
    if (*b.voice == Voice::Active)
      return *b.tense == Tense::Present ? ParticipleKind::PresentActive
             : *b.tense == Tense::Past  ? ParticipleKind::PastActive
                                        : std::optional<ParticipleKind>();
    return *b.tense == Tense::Past ? ParticipleKind::PastPassive
                                   : std::optional<ParticipleKind>();
  };
  if (auto k = kind_from(l.lemma_bundle)) return k;
  for (const CorpusForm& f : l.forms) {
    FeatureBundle merged = f.bundle;
    if (!merged.tense) merged.tense = l.lemma_bundle.tense;
    if (!merged.voice) merged.voice = l.lemma_bundle.voice;
    if (auto k = kind_from(merged)) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Slot collectors per POS family. Each returns the filled SlotMap plus an
// engine-call closure index; the caller then runs the engine per slot.

struct Collected {
  SlotMap slots;
  // Engine call per slot tag, evaluated lazily so timing covers generation.
  std::map<std::string, std::function<Result<CyrillicWord>()>> calls;
};

void collect_noun(const CorpusLexeme& l, Collected* out) {
  for (const CorpusForm& f : l.forms) {
    if (!f.comparable || !f.bundle.case_ || !f.bundle.number) continue;
    FeatureBundle key = noun_slot(*f.bundle.case_, *f.bundle.number);
    std::string tag = key.tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [lemma = l.lemma, key] {
      return inflect_noun(lemma, *key.case_, *key.number);
    });
  }
}

void collect_adjective_like(
    const CorpusLexeme& full, const CorpusLexeme* shorts,
    const std::function<Result<CyrillicWord>(const FeatureBundle&)>& engine,
    bool with_shorts, Collected* out) {
  for (const CorpusForm& f : full.forms) {
    if (!f.comparable) continue;
    std::optional<FeatureBundle> b = long_adj_bundle(f.bundle);
    if (!b) continue;
    std::string tag = b->tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [engine, key = *b] { return engine(key); });
  }
  if (!with_shorts || !shorts) return;
  for (const CorpusForm& f : shorts->forms) {
    if (!f.comparable || f.bundle.case_) continue;
    std::optional<GenderOrPlural> g = bundle_gop(f.bundle);
    if (!g) continue;
    FeatureBundle b = adjective_short_slot(*g);
    std::string tag = "short;" + b.tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [engine, key = b] { return engine(key); });
  }
}

void collect_verb(const Lexicon& lex, const CorpusLexeme& inf,
                  Collected* out) {
  for (const CorpusForm& f : inf.forms) {
    if (!f.comparable) continue;
    file_variant(&out->slots, "inf", f.form);
    out->calls.try_emplace("inf", [lemma = inf.lemma] {
      return conjugate(lemma, FeatureBundle{});
    });
  }
  const CorpusLexeme* fin = first_linked(lex, inf.id, CorpusPos::Verb);
  if (!fin) return;
  for (const CorpusForm& f : fin->forms) {
    if (!f.comparable || f.imperative || !f.bundle.tense) continue;
    FeatureBundle b;
    b.tense = f.bundle.tense;
    if (*f.bundle.tense == Tense::Past) {
      if (f.bundle.number == Number::Plural) {
        b.number = Number::Plural;
      } else if (f.bundle.gender) {
        b.number = Number::Singular;
        b.gender = f.bundle.gender;
      } else {
        continue;
      }
    } else {
      if (!f.bundle.person || !f.bundle.number) continue;
      b.person = f.bundle.person;
      b.number = f.bundle.number;
    }
    std::string tag = b.tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [lemma = inf.lemma, key = b] {
      return conjugate(lemma, key);
    });
  }
}

void collect_imperative(const Lexicon& lex, const CorpusLexeme& inf,
                        Collected* out) {
  const CorpusLexeme* fin = first_linked(lex, inf.id, CorpusPos::Verb);
  if (!fin) return;
  for (const CorpusForm& f : fin->forms) {
    if (!f.comparable || !f.imperative || !f.bundle.number) continue;
    Number n = *f.bundle.number;
    std::string tag =
        n == Number::Plural ? "imper;num=pl" : "imper;num=sg";
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [lemma = inf.lemma, n] {
      return imperative(lemma, n);
    });
  }
}

void collect_gerund(const Lexicon& lex, const CorpusLexeme& inf,
                    Collected* out) {
  for (const CorpusLexeme* g : all_linked(lex, inf.id, CorpusPos::Gerund)) {
    for (const CorpusForm& f : g->forms) {
      if (!f.comparable) continue;
      std::optional<Tense> tense = f.bundle.tense;
      if (!tense && g->lemma_bundle.tense) tense = g->lemma_bundle.tense;
      bool perfective_slot;
      if (tense) {
        perfective_slot = *tense == Tense::Past;
      } else {
        std::optional<Aspect> asp = f.bundle.aspect;
        if (!asp) asp = g->lemma_bundle.aspect;
        if (!asp) asp = inf.lemma_bundle.aspect;
        if (!asp) continue;
        perfective_slot = *asp == Aspect::Perfective;
      }
      std::string tag = perfective_slot ? "ger;asp=perf" : "ger;asp=impf";
      file_variant(&out->slots, tag, f.form);
      out->calls.try_emplace(tag, [lemma = inf.lemma, perfective_slot] {
        return perfective_slot ? perfective_gerund(lemma)
                               : imperfective_gerund(lemma);
      });
    }
  }
}

void collect_participle(const Lexicon& lex, const CorpusLexeme& inf,
                        ParticipleKind kind, Collected* out) {
  for (const CorpusLexeme* p :
       all_linked(lex, inf.id, CorpusPos::ParticipleFull)) {
    if (participle_kind_of(*p) != kind) continue;
    for (const CorpusForm& f : p->forms) {
      if (!f.comparable) continue;
      std::optional<FeatureBundle> b = long_adj_bundle(f.bundle);
      if (!b) continue;
      std::string tag = b->tag();
      file_variant(&out->slots, tag, f.form);
      out->calls.try_emplace(
          tag, [lemma = inf.lemma, kind, key = *b] {
            return participle(lemma, kind,
                              *bundle_gop(key), *key.case_,
                              key.animacy.value_or(Animacy::Inanimate));
          });
    }
    if (kind != ParticipleKind::PastPassive) continue;
    for (const CorpusLexeme* ps :
         all_linked(lex, p->id, CorpusPos::ParticipleShort)) {
      for (const CorpusForm& f : ps->forms) {
        if (!f.comparable || f.bundle.case_) continue;
        std::optional<GenderOrPlural> g = bundle_gop(f.bundle);
        if (!g) continue;
        FeatureBundle b = adjective_short_slot(*g);
        std::string tag = "short;" + b.tag();
        file_variant(&out->slots, tag, f.form);
        out->calls.try_emplace(tag, [lemma = inf.lemma, gop = *g] {
          return participle_short(lemma, gop);
        });
      }
    }
  }
}

void collect_adverb(const Lexicon& lex, const CorpusLexeme& adv,
                    Collected* out) {
  const CorpusLexeme* comp =
      first_linked(lex, adv.id, CorpusPos::Comparative);
  if (!comp) return;
  for (const CorpusForm& f : comp->forms) {
    if (!f.comparable) continue;
    file_variant(&out->slots, "degree=comp", f.form);
    out->calls.try_emplace("degree=comp",
                           [lemma = adv.lemma]() -> Result<CyrillicWord> {
                             Result<AdverbDegrees> d = adverb_degrees(lemma);
                             if (!d.ok()) return d.error();
                             return d->comparative;
                           });
  }
}

void collect_cardinal(const CorpusLexeme& l, int value, Collected* out) {
  for (const CorpusForm& f : l.forms) {
    if (!f.comparable || !f.bundle.case_) continue;
    Case c = *f.bundle.case_;
    Gender g = f.bundle.gender.value_or(Gender::Masculine);
    Animacy a = f.bundle.animacy.value_or(Animacy::Inanimate);
    FeatureBundle key;
    key.case_ = c;
    key.gender = f.bundle.gender;
    key.animacy = f.bundle.animacy;
    std::string tag = key.tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [value, c, g, a] {
      return cardinal(value, c, g, a);
    });
  }
}

void collect_ordinal(const CorpusLexeme& l, int value, Collected* out) {
  for (const CorpusForm& f : l.forms) {
    if (!f.comparable) continue;
    std::optional<FeatureBundle> b = long_adj_bundle(f.bundle);
    if (!b) continue;
    std::string tag = b->tag();
    file_variant(&out->slots, tag, f.form);
    out->calls.try_emplace(tag, [value, key = *b] {
      return ordinal(value, *bundle_gop(key), *key.case_,
                     key.animacy.value_or(Animacy::Inanimate));
    });
  }
}

std::vector<const CorpusLexeme*> apply_sample(
    std::vector<const CorpusLexeme*> all, const SampleSpec& sample) {
  if (!sample.limit || *sample.limit >= all.size()) return all;
  std::vector<const CorpusLexeme*> out;
  out.reserve(*sample.limit);
  std::mt19937_64 rng(sample.seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), *sample.limit,
              rng);
  return out;
}

}  // namespace

std::vector<const CorpusLexeme*> pos_roots(const Lexicon& lex, Pos pos) {
  switch (pos) {
    case Pos::Noun: return lex.of_pos(CorpusPos::Noun);
    case Pos::Adjective: return lex.of_pos(CorpusPos::AdjectiveFull);
    case Pos::Adverb: return lex.of_pos(CorpusPos::Adverb);
    case Pos::Cardinal: {
      std::vector<const CorpusLexeme*> out;
      for (const CorpusLexeme* l : lex.of_pos(CorpusPos::Numeral))
        if (cardinal_value(l->lemma)) out.push_back(l);
      return out;
    }
    case Pos::Ordinal: {
      std::vector<const CorpusLexeme*> out;
      for (const CorpusLexeme* l : lex.of_pos(CorpusPos::AdjectiveFull))
        if (ordinal_value(l->lemma)) out.push_back(l);
      return out;
    }
    default:
      // Verb family POS all walk infinitive lexemes.
      return lex.of_pos(CorpusPos::Infinitive);
  }
}

Result<AgreementReport> evaluate_pos(const Lexicon& lexicon, Pos pos,
                                     const SampleSpec& sample) {
  AgreementReport report;
  report.pos = pos;
  std::vector<const CorpusLexeme*> roots =
      apply_sample(pos_roots(lexicon, pos), sample);

  auto t0 = std::chrono::steady_clock::now();
  for (const CorpusLexeme* root : roots) {
    Collected c;
    switch (pos) {
      case Pos::Noun:
        collect_noun(*root, &c);
        break;
      case Pos::Adjective: {
        const CorpusLexeme* shorts =
            first_linked(lexicon, root->id, CorpusPos::AdjectiveShort);
        collect_adjective_like(
            *root, shorts,
            [lemma = root->lemma](const FeatureBundle& b) {
              return inflect_adjective(lemma, b);
            },
            true, &c);
        break;
      }
      case Pos::Verb:
        collect_verb(lexicon, *root, &c);
        break;
      case Pos::Imperative:
        collect_imperative(lexicon, *root, &c);
        break;
      case Pos::Gerund:
        collect_gerund(lexicon, *root, &c);
        break;
      case Pos::ParticiplePresAct:
        collect_participle(lexicon, *root, ParticipleKind::PresentActive, &c);
        break;
      case Pos::ParticiplePastAct:
        collect_participle(lexicon, *root, ParticipleKind::PastActive, &c);
        break;
      case Pos::ParticiplePastPass:
        collect_participle(lexicon, *root, ParticipleKind::PastPassive, &c);
        break;
      case Pos::Adverb:
        collect_adverb(lexicon, *root, &c);
        break;
      case Pos::Cardinal:
        collect_cardinal(*root, *cardinal_value(root->lemma), &c);
        break;
      case Pos::Ordinal:
        collect_ordinal(*root, *ordinal_value(root->lemma), &c);
        break;
    }

    ++report.words;
    for (const auto& [tag, expected] : c.slots) {
      ++report.forms_compared;
      Result<CyrillicWord> produced = c.calls.at(tag)();
      std::string produced_text = produced.ok() ? produced->str() : "";
      if (produced.ok() && expected.count(produced_text)) {
        ++report.matches;
        continue;
      }
      Discrepancy d;
      d.lexeme_id = root->id;
      d.lemma = root->lemma;
      d.slot_tag = tag;
      std::string joined;
      for (const std::string& v : expected) {
        if (!joined.empty()) joined += '|';
        joined += v;
      }
      d.expected = std::move(joined);
      d.produced = std::move(produced_text);
      report.discrepancies.push_back(std::move(d));
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  report.total_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

Result<double> avg_form_count(const Lexicon& lexicon, Pos pos,
                              Counting mode) {
  std::vector<const CorpusLexeme*> roots = pos_roots(lexicon, pos);
  if (roots.empty())
    return make_error(errc::empty, "no lexemes for this POS");

  auto family = [&](const CorpusLexeme* root) {
    std::vector<const CorpusLexeme*> fam{root};
    if (pos == Pos::Verb) {
      for (const CorpusLexeme* s : lexicon.linked_from(root->id)) {
        if (s->pos == CorpusPos::Verb || s->pos == CorpusPos::Gerund ||
            s->pos == CorpusPos::ParticipleFull) {
          fam.push_back(s);
          if (s->pos == CorpusPos::ParticipleFull)
            for (const CorpusLexeme* ps :
                 all_linked(lexicon, s->id, CorpusPos::ParticipleShort))
              fam.push_back(ps);
        }
      }
    } else if (pos == Pos::Adjective) {
      for (const CorpusLexeme* s :
           all_linked(lexicon, root->id, CorpusPos::AdjectiveShort))
        fam.push_back(s);
    } else if (pos == Pos::Adverb) {
      for (const CorpusLexeme* s :
           all_linked(lexicon, root->id, CorpusPos::Comparative))
        fam.push_back(s);
    }
    return fam;
  };

  double total = 0;
  for (const CorpusLexeme* root : roots) {
    std::set<std::string> seen;
    for (const CorpusLexeme* l : family(root)) {
      for (const CorpusForm& f : l->forms) {
        if (mode == Counting::DistinctStrings) {
          seen.insert(f.form.str());
        } else {
          std::string key = std::string(name_of(l->pos)) + ";" +
                            f.bundle.tag() + (f.imperative ? ";impr" : "");
          for (const std::string& flag : f.flags) key += ";" + flag;
          seen.insert(std::move(key));
        }
      }
    }
    total += static_cast<double>(seen.size());
  }
  return total / static_cast<double>(roots.size());
}

Result<Errata> Errata::parse(std::string_view text) {
  Errata e;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start
                                             : end - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t' ||
                             line.front() == '\r'))
      line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);
    if (!line.empty()) {
      bool digits = line.size() <= 9;
      for (char c : line)
        if (c < '0' || c > '9') digits = false;
      if (digits) {
        e.ids.insert(std::stoi(std::string(line)));
      } else {
        Result<CyrillicWord> w = CyrillicWord::parse(line);
        if (!w.ok())
          return make_error(errc::parse,
                            "bad errata entry: " + std::string(line));
        e.lemmas.insert(w->str());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return e;
}

bool Errata::contains(int id, const CyrillicWord& lemma) const {
  return ids.count(id) > 0 || lemmas.count(lemma.str()) > 0;
}

AgreementReport errata_filter(const AgreementReport& report,
                              const Errata& errata) {
  AgreementReport out = report;
  out.discrepancies.clear();
  for (const Discrepancy& d : report.discrepancies) {
    if (errata.contains(d.lexeme_id, d.lemma)) {
      // Removed from the comparison set entirely.
      --out.forms_compared;
    } else {
      out.discrepancies.push_back(d);
    }
  }
  return out;
}

std::string report_table(const AgreementReport& report) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << name_of(report.pos) << "\twords=" << report.words
     << "\tforms=" << report.forms_compared << "\tmatches=" << report.matches
     << "\trate=" << report.rate() << "%"
     << "\ttotal=" << report.total_ms / 1000.0 << "s";
  os.precision(4);
  os << "\tper-word=" << report.per_word_ms() << "ms";
  return os.str();
}

std::string discrepancy_csv(const AgreementReport& report) {
  std::string out = "lemma,slot,expected,produced\n";
  for (const Discrepancy& d : report.discrepancies) {
    out += d.lemma.str();
    out += ',';
    out += d.slot_tag;
    out += ',';
    out += d.expected;
    out += ',';
    out += d.produced;
    out += '\n';
  }
  return out;
}

}  // namespace rumorph
