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

#include "rumorph/adjective.hpp"

#include "rumorph/tables.hpp"

namespace rumorph {

namespace {

using std::u32string;
using std::u32string_view;

bool ends_with(u32string_view w, u32string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

struct AdjShape {
  u32string stem;    // lemma minus the 2-char ending
  u32string lemma;   // without the reflexive tail
  bool reflexive = false;
  bool soft = false;
  bool stressed_end = false;  // -ой
  bool possessive = false;    // лисий: stem + ь + short endings
  bool indeclinable = false;
};

Result<AdjShape> classify(const CyrillicWord& word, const Tables& t) {
  AdjShape s;
  u32string w(word.chars());
  if (ends_with(w, U"ся")) {
    s.reflexive = true;
    w = w.substr(0, w.size() - 2);
  }
  s.lemma = w;
  if (t.indeclinable_adjectives.count(w)) {
    s.indeclinable = true;
    return s;
  }
  if (w.size() < 3)
    return make_error(errc::not_adjective_shaped,
                      "not an adjective: " + word.str());
  u32string_view tail(w.data() + w.size() - 2, 2);
  s.stem = w.substr(0, w.size() - 2);
  if (tail == U"ой") {
    s.stressed_end = true;
  } else if (tail == U"ый") {
  } else if (tail == U"ий") {
    if (t.possessive_soft.count(w))
      s.possessive = true;
    else if (!is_velar(s.stem.back()) && !is_sibilant(s.stem.back()))
      s.soft = true;
  } else {
    return make_error(errc::not_adjective_shaped,
                      "not an adjective: " + word.str());
  }
  return s;
}

// Long-form ending before spelling adjustments.
u32string_view long_ending(Case c, GenderOrPlural g, bool soft, bool anim,
                           bool stressed) {
  bool pl = g == GenderOrPlural::Plural;
  bool fem = g == GenderOrPlural::Feminine;
  bool masc = g == GenderOrPlural::Masculine;
  switch (c) {
    case Case::Nominative:
      if (masc) return soft ? U"ий" : (stressed ? U"ой" : U"ый");
      if (fem) return soft ? U"яя" : U"ая";
      if (pl) return soft ? U"ие" : U"ые";
      return soft ? U"ее" : U"ое";
    case Case::Genitive:
      if (fem) return soft ? U"ей" : U"ой";
      if (pl) return soft ? U"их" : U"ых";
      return soft ? U"его" : U"ого";
    case Case::Dative:
      if (fem) return soft ? U"ей" : U"ой";
      if (pl) return soft ? U"им" : U"ым";
      return soft ? U"ему" : U"ому";
    case Case::Accusative:
      if (fem) return soft ? U"юю" : U"ую";
      if (masc)
        return anim ? long_ending(Case::Genitive, g, soft, anim, stressed)
                    : long_ending(Case::Nominative, g, soft, anim, stressed);
      if (pl)
        return anim ? long_ending(Case::Genitive, g, soft, anim, stressed)
                    : long_ending(Case::Nominative, g, soft, anim, stressed);
      return soft ? U"ее" : U"ое";
    case Case::Instrumental:
      if (fem) return soft ? U"ей" : U"ой";
      if (pl) return soft ? U"ими" : U"ыми";
      return soft ? U"им" : U"ым";
    case Case::Prepositional:
      if (fem) return soft ? U"ей" : U"ой";
      if (pl) return soft ? U"их" : U"ых";
      return soft ? U"ем" : U"ом";
  }
  return U"";
}

// Possessive-soft endings (лисий): а zero masc nominative, short vocalic
// endings over the ь-stem everywhere else.
u32string_view possessive_ending(Case c, GenderOrPlural g, bool anim) {
  bool pl = g == GenderOrPlural::Plural;
  bool fem = g == GenderOrPlural::Feminine;
  bool masc = g == GenderOrPlural::Masculine;
  switch (c) {
    case Case::Nominative:
      if (masc) return U"";  // the lemma itself
      if (fem) return U"я";
      if (pl) return U"и";
      return U"е";
    case Case::Genitive:
      if (fem) return U"ей";
      if (pl) return U"их";
      return U"его";
    case Case::Dative:
      if (fem) return U"ей";
      if (pl) return U"им";
      return U"ему";
    case Case::Accusative:
      if (fem) return U"ю";
      if (masc) return anim ? U"его" : U"";
      if (pl) return anim ? U"их" : U"и";
      return U"е";
    case Case::Instrumental:
      if (fem) return U"ей";
      if (pl) return U"ими";
      return U"им";
    case Case::Prepositional:
      if (fem) return U"ей";
      if (pl) return U"их";
      return U"ем";
  }
  return U"";
}

u32string glue_long(const AdjShape& s, u32string_view ending) {
  u32string out = s.stem;
  if (ending.empty()) return s.lemma;
  char32_t last = s.stem.back();
  char32_t first = ending.front();
  if ((is_velar(last) || is_sibilant(last)) && first == U'ы') first = U'и';
  if (is_sibilant(last) && !s.stressed_end && first == U'о') first = U'е';
  out += first;
  out.append(ending.substr(1));
  return out;
}

GenderOrPlural bundle_gp(const FeatureBundle& b) {
  if (b.number == Number::Plural) return GenderOrPlural::Plural;
  return to_gender_or_plural(b.gender.value_or(Gender::Masculine));
}

// Masculine short form: a fill vowel breaks up a final cluster
// (важный -> важен, крепкий -> крепок, спокойный -> спокоен).
u32string short_masculine(const u32string& stem) {
  if (stem.size() < 2) return stem;
  char32_t c2 = stem.back();
  char32_t c1 = stem[stem.size() - 2];
  if (is_vowel(c1)) return stem;
  u32string out = stem;
  if (c1 == U'ь' || c1 == U'й') {
    out[out.size() - 2] = U'е';
    return out;
  }
  if (c2 == U'к') {
    out.insert(out.size() - 1, 1, is_sibilant(c1) ? U'е' : U'о');
    return out;
  }
  if (c2 == U'н') {
    out.insert(out.size() - 1, 1, U'е');
    return out;
  }
  return stem;
}

bool short_forms_exist(const AdjShape& s, const Tables& t) {
  if (s.indeclinable || s.reflexive || s.possessive) return false;
  if (t.short_form_skip.count(s.lemma)) return false;
  if (t.short_overrides.count(s.lemma)) return true;
  if (ends_with(s.stem, U"ск")) return false;  // relational -ский
  if (s.soft && s.stem.back() == U'н') return false;
  return true;
}

Result<u32string> short_form(const AdjShape& s, const Tables& t,
                             GenderOrPlural g) {
  if (!short_forms_exist(s, t))
    return make_error(errc::no_such_form,
                      "no short form: " +
                          CyrillicWord::from_normalized(s.lemma).str());
  if (auto it = t.short_overrides.find(s.lemma);
      it != t.short_overrides.end())
    return it->second[static_cast<std::size_t>(g)];
  const u32string& st = s.stem;
  char32_t last = st.back();
  switch (g) {
    case GenderOrPlural::Masculine: return short_masculine(st);
    case GenderOrPlural::Feminine: {
      char32_t v = s.soft && !is_sibilant(last) ? U'я' : U'а';
      return st + v;
    }
    case GenderOrPlural::Neuter: {
      char32_t v = s.soft && !is_sibilant(last) ? U'е' : U'о';
      return st + v;
    }
    case GenderOrPlural::Plural: {
      char32_t v = (s.soft || is_velar(last) || is_sibilant(last)) ? U'и' : U'ы';
      return st + v;
    }
  }
  return st;
}

Result<u32string> adjective_form(const AdjShape& s, const Tables& t,
                                 const FeatureBundle& b) {
  if (!b.case_) {
    Result<u32string> f = short_form(s, t, bundle_gp(b));
    if (!f.ok()) return f;
    return s.reflexive ? *f + U"ся" : *f;
  }
  if (s.indeclinable) return s.lemma;
  GenderOrPlural g = bundle_gp(b);
  bool anim = b.animacy.value_or(Animacy::Inanimate) == Animacy::Animate;
  u32string form;
  if (s.possessive) {
    u32string_view e = possessive_ending(*b.case_, g, anim);
    form = e.empty() ? s.lemma : s.stem + U'ь' + u32string(e);
  } else {
    form = glue_long(s, long_ending(*b.case_, g, s.soft, anim,
                                    s.stressed_end));
  }
  if (s.reflexive) form += U"ся";
  return form;
}

}  // namespace

bool adjective_shaped(const CyrillicWord& lemma) {
  u32string w(lemma.chars());
  if (ends_with(w, U"ся")) w = w.substr(0, w.size() - 2);
  if (w.size() < 3) return false;
  return ends_with(w, U"ый") || ends_with(w, U"ий") || ends_with(w, U"ой");
}

Result<CyrillicWord> inflect_adjective(const CyrillicWord& lemma,
                                       const FeatureBundle& features) {
  if (lemma.empty()) return make_error(errc::not_russian, "empty lemma");
  const Tables& t = active_tables();
  Result<AdjShape> s = classify(lemma, t);
  if (!s.ok()) return s.error();
  Result<u32string> f = adjective_form(*s, t, features);
  if (!f.ok()) return f.error();
  return CyrillicWord::from_normalized(*f);
}

Result<Paradigm> adjective_paradigm(const CyrillicWord& lemma) {
  if (lemma.empty()) return make_error(errc::not_russian, "empty lemma");
  const Tables& t = active_tables();
  Result<AdjShape> s = classify(lemma, t);
  if (!s.ok()) return s.error();
  Paradigm p;
  p.lemma = lemma;
  p.pos = Pos::Adjective;
  for (const FeatureBundle& b : slot_table(Pos::Adjective)) {
    Paradigm::Slot slot;
    slot.features = b;
    Result<u32string> f = adjective_form(*s, t, b);
    if (f.ok()) {
      slot.form = CyrillicWord::from_normalized(*f);
    } else if (f.error().code != errc::no_such_form) {
      return f.error();
    }
    p.slots.push_back(std::move(slot));
  }
  return p;
}

namespace {

// Comparative of an adverb in -о/-е; consonant mutation at the seam.
Result<u32string> adverb_comparative(const u32string& w, const Tables& t) {
  if (auto it = t.suppletive_adverbs.find(w); it != t.suppletive_adverbs.end())
    return it->second;
  char32_t last = w.back();
  if (last != U'о' && last != U'е')
    return make_error(errc::no_such_form,
                      "no degrees of comparison: " +
                          CyrillicWord::from_normalized(w).str());
  u32string base = w.substr(0, w.size() - 1);
  if (base.size() >= 3 &&
      (ends_with(base, U"дк") || ends_with(base, U"зк")))
    return base.substr(0, base.size() - 2) + U"же";
  if (base.size() >= 3 && ends_with(base, U"ст"))
    return base.substr(0, base.size() - 2) + U"ще";
  char32_t b = base.back();
  if (b == U'к') return base.substr(0, base.size() - 1) + U"че";
  if (b == U'г') return base.substr(0, base.size() - 1) + U"же";
  if (b == U'х') return base.substr(0, base.size() - 1) + U"ше";
  if (b == U'т') return base.substr(0, base.size() - 1) + U"че";
  if (b == U'д') return base.substr(0, base.size() - 1) + U"же";
  return base + U"ее";
}

}  // namespace

Result<AdverbDegrees> adverb_degrees(const CyrillicWord& adverb) {
  if (adverb.empty()) return make_error(errc::not_russian, "empty lemma");
  Result<u32string> cmp =
      adverb_comparative(u32string(adverb.chars()), active_tables());
  if (!cmp.ok()) return cmp.error();
  AdverbDegrees d;
  d.comparative = CyrillicWord::from_normalized(*cmp);
  d.superlative = join_words(
      {d.comparative, CyrillicWord::from_normalized(U"всего")});
  return d;
}

Result<Paradigm> adverb_paradigm(const CyrillicWord& adverb) {
  if (adverb.empty()) return make_error(errc::not_russian, "empty lemma");
  Paradigm p;
  p.lemma = adverb;
  p.pos = Pos::Adverb;
  Result<AdverbDegrees> d = adverb_degrees(adverb);
  for (const FeatureBundle& b : slot_table(Pos::Adverb)) {
    Paradigm::Slot slot;
    slot.features = b;
    if (d.ok())
      slot.form = b.degree == Degree::Comparative ? d->comparative
                                                  : d->superlative;
    p.slots.push_back(std::move(slot));
  }
  if (!d.ok() && d.error().code != errc::no_such_form) return d.error();
  return p;
}

}  // namespace rumorph
