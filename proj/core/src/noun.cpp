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

#include "rumorph/noun.hpp"

#include <array>

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

// Spelling filter at the stem/ending seam: ы я ю cannot follow a hush
// sibilant, ы cannot follow a velar.
u32string spell(u32string stem, u32string_view ending) {
  if (!ending.empty() && !stem.empty()) {
    char32_t last = stem.back();
    char32_t first = ending.front();
    if (is_sibilant(last)) {
      if (first == U'ы') first = U'и';
      if (first == U'я') first = U'а';
      if (first == U'ю') first = U'у';
    } else if (is_velar(last)) {
      if (first == U'ы') first = U'и';
    }
    stem += first;
    stem.append(ending.substr(1));
    return stem;
  }
  stem.append(ending);
  return stem;
}

enum class Decl { First, SecondMasc, SecondNeut, Third, Mya };

struct Shape {
  Decl decl = Decl::SecondMasc;
  Gender gender = Gender::Masculine;
  Animacy animacy = Animacy::Inanimate;
  bool soft = false;       // я/ь/й/е stem
  bool i_subtype = false;  // -ия/-ий/-ие
  bool ye_subtype = false; // -ье/-ья
  bool sib_hard = false;   // neuter -е after a hush or ц
  u32string stem;          // lemma minus its vocalic ending
  u32string oblique;       // stem with the fugitive vowel dropped
};

Animacy infer_animacy(const u32string& w, const Tables& t) {
  if (t.animate.count(w)) return Animacy::Animate;
  if (ends_with(w, U"тель") || ends_with(w, U"ник") || ends_with(w, U"ист"))
    return Animacy::Animate;
  if (ends_with(w, U"анин") || ends_with(w, U"янин"))
    return Animacy::Animate;
  if (ends_with(w, U"енок") || ends_with(w, U"онок"))
    return Animacy::Animate;
  return Animacy::Inanimate;
}

Gender infer_gender(const u32string& w, const Tables& t) {
  auto it = t.gender_overrides.find(w);
  if (it != t.gender_overrides.end()) return it->second;
  if (ends_with(w, U"мя")) return Gender::Neuter;
  char32_t last = w.back();
  if (last == U'а' || last == U'я') return Gender::Feminine;
  if (last == U'о' || last == U'е') return Gender::Neuter;
  if (last == U'ь') {
    if (w.size() >= 2 && is_sibilant(w[w.size() - 2])) return Gender::Feminine;
    if (ends_with(w, U"сть") || ends_with(w, U"знь")) return Gender::Feminine;
    return Gender::Masculine;
  }
  return Gender::Masculine;
}

bool has_fugitive(const u32string& w, const Tables& t) {
  if (t.fleeting.count(w)) return true;
  if (t.nonfleeting.count(w)) return false;
  if (w.size() < 3) return false;
  u32string_view tail(w.data() + w.size() - 2, 2);
  if (tail != U"ок" && tail != U"ек" && tail != U"ец") return false;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (is_vowel(w[i])) return true;  // a syllable survives the drop
  return false;
}

// Removes the last vowel of the stem; л turns the dropped е into ь
// (лев -> льв), a preceding vowel turns it into й (боец -> бойц).
u32string drop_fugitive(u32string stem) {
  for (std::size_t i = stem.size(); i-- > 0;) {
    if (!is_vowel(stem[i])) continue;
    if (i + 1 == stem.size() && stem[i] == U'е') {
      stem[i] = U'ь';  // воробей -> воробья
    } else if (i > 0 && stem[i - 1] == U'л' && stem[i] == U'е') {
      stem[i] = U'ь';  // лев -> льва
    } else if (i > 0 && is_vowel(stem[i - 1])) {
      stem[i] = U'й';  // боец -> бойца
    } else {
      stem.erase(i, 1);
    }
    return stem;
  }
  return stem;
}

// Zero-ending genitive plural: inserts о or е into a final consonant
// cluster (окно -> окон, кошка -> кошек, деньги -> денег).
u32string insert_fill(u32string stem) {
  if (stem.size() < 2) return stem;
  char32_t c2 = stem.back();
  char32_t c1 = stem[stem.size() - 2];
  if (c1 == U'ь' || c1 == U'й') {
    stem[stem.size() - 2] = U'е';
    return stem;
  }
  if (is_vowel(c1) || is_vowel(c2)) return stem;
  bool insertable = c2 == U'к' || c2 == U'н' || c2 == U'л' || c2 == U'ц';
  if (c1 == U'р' && c2 == U'н') insertable = false;  // урна -> урн
  if (!insertable) return stem;
  char32_t fill = U'е';
  if (!is_sibilant(c1) && (is_velar(c1) || is_velar(c2))) fill = U'о';
  stem.insert(stem.size() - 1, 1, fill);
  return stem;
}

const std::optional<u32string>* irregular_lookup(const u32string& w,
                                                 const Tables& t, Case c,
                                                 Number n) {
  auto it = t.irregular_nouns.find(w);
  if (it == t.irregular_nouns.end()) return nullptr;
  return &it->second[static_cast<std::size_t>(c) * 2 +
                     static_cast<std::size_t>(n)];
}

Result<Shape> classify(const u32string& w, const Tables& t) {
  Shape s;
  s.animacy = infer_animacy(w, t);
  s.gender = infer_gender(w, t);
  char32_t last = w.back();
  if (ends_with(w, U"мя")) {
    s.decl = Decl::Mya;
    s.stem = w.substr(0, w.size() - 2) + U'м';
    s.oblique = s.stem;
    return s;
  }
  switch (last) {
    case U'а':
      s.decl = Decl::First;
      s.stem = w.substr(0, w.size() - 1);
      break;
    case U'я':
      s.decl = Decl::First;
      s.soft = true;
      s.stem = w.substr(0, w.size() - 1);
      s.i_subtype = ends_with(w, U"ия");
      s.ye_subtype = ends_with(w, U"ья");
      break;
    case U'о':
      s.decl = Decl::SecondNeut;
      s.stem = w.substr(0, w.size() - 1);
      break;
    case U'е':
      s.decl = Decl::SecondNeut;
      s.stem = w.substr(0, w.size() - 1);
      if (!s.stem.empty() && (is_sibilant(s.stem.back()) || s.stem.back() == U'ц'))
        s.sib_hard = true;
      else
        s.soft = true;
      s.i_subtype = ends_with(w, U"ие");
      s.ye_subtype = ends_with(w, U"ье");
      break;
    case U'й':
      s.decl = Decl::SecondMasc;
      s.soft = true;
      s.stem = w.substr(0, w.size() - 1);
      s.i_subtype = ends_with(w, U"ий");
      break;
    case U'ь':
      s.stem = w.substr(0, w.size() - 1);
      if (s.gender == Gender::Feminine) {
        s.decl = Decl::Third;
      } else {
        s.decl = Decl::SecondMasc;
        s.soft = true;
      }
      break;
    default:
      s.decl = Decl::SecondMasc;
      s.stem = w;
      break;
  }
  s.oblique = s.stem;
  if ((s.decl == Decl::SecondMasc || s.decl == Decl::Third) &&
      has_fugitive(w, t))
    s.oblique = drop_fugitive(s.stem);
  return s;
}

u32string genitive_plural_first(const Shape& s, const u32string& w) {
  if (s.i_subtype) return w.substr(0, w.size() - 2) + U"ий";
  if (s.ye_subtype) return w.substr(0, w.size() - 2) + U"ей";
  u32string filled = insert_fill(s.stem);
  if (s.soft) {
    if (filled == s.stem && !is_vowel(filled.back())) return filled + U'ь';
    if (filled != s.stem && filled.back() == U'л') return filled + U'ь';
  }
  return filled;
}

u32string genitive_plural_masc(const Shape& s, const Tables& t,
                               const u32string& w) {
  const u32string& ob = s.oblique;
  char32_t last = ob.empty() ? U'#' : ob.back();
  if (s.soft) {
    if (w.back() == U'й') return ob + U"ев";  // музеев, воробьев
    return ob + U"ей";                        // коней, учителей
  }
  if (is_sibilant(last)) return ob + U"ей";
  if (last == U'ц')
    return t.sibilant_stressed.count(w) ? ob + U"ов" : ob + U"ев";
  return ob + U"ов";
}

struct PluralStem {
  u32string stem;
  bool soft = false;
};

PluralStem pluralia_stem(const u32string& w) {
  PluralStem p;
  char32_t last = w.back();
  p.stem = w.substr(0, w.size() - 1);
  if (last == U'и' && !p.stem.empty() && !is_velar(p.stem.back()) &&
      !is_sibilant(p.stem.back()))
    p.soft = true;
  return p;
}

Result<u32string> pluralia_form(const u32string& w, const Tables& t, Case c,
                                const std::optional<u32string>& gen_override,
                                Animacy anim) {
  PluralStem p = pluralia_stem(w);
  auto genitive = [&]() -> u32string {
    if (gen_override) return *gen_override;
    u32string filled = insert_fill(p.stem);
    if (p.soft && filled == p.stem && !is_vowel(filled.back()))
      return filled + U'ь';
    return filled;
  };
  switch (c) {
    case Case::Nominative: return w;
    case Case::Genitive: return genitive();
    case Case::Dative: return spell(p.stem, p.soft ? U"ям" : U"ам");
    case Case::Accusative:
      return anim == Animacy::Animate ? genitive() : w;
    case Case::Instrumental:
      return spell(p.stem, p.soft ? U"ями" : U"ами");
    case Case::Prepositional:
      return spell(p.stem, p.soft ? U"ях" : U"ах");
  }
  return w;
}

Result<u32string> form_first(const Shape& s, const u32string& w,
                             const Tables& t, Case c, Number n) {
  const u32string& st = s.stem;
  if (n == Number::Singular) {
    switch (c) {
      case Case::Nominative: return w;
      case Case::Genitive: return spell(st, s.soft ? U"и" : U"ы");
      case Case::Dative: return st + (s.i_subtype ? U"и" : U"е");
      case Case::Accusative: return spell(st, s.soft ? U"ю" : U"у");
      case Case::Instrumental: {
        bool soft_like = s.soft || ((is_sibilant(st.back()) || st.back() == U'ц') &&
                                    !t.sibilant_stressed.count(w));
        return st + (soft_like ? U"ей" : U"ой");
      }
      case Case::Prepositional: return st + (s.i_subtype ? U"и" : U"е");
    }
  }
  switch (c) {
    case Case::Nominative: return spell(st, s.soft ? U"и" : U"ы");
    case Case::Genitive: return genitive_plural_first(s, w);
    case Case::Dative: return spell(st, s.soft ? U"ям" : U"ам");
    case Case::Accusative: {
      if (s.animacy == Animacy::Animate) return genitive_plural_first(s, w);
      return spell(st, s.soft ? U"и" : U"ы");
    }
    case Case::Instrumental: return spell(st, s.soft ? U"ями" : U"ами");
    case Case::Prepositional: return spell(st, s.soft ? U"ях" : U"ах");
  }
  return w;
}

Result<u32string> form_second_masc(const Shape& s, const u32string& w,
                                   const Tables& t, Case c, Number n) {
  const u32string& ob = s.oblique;
  auto genitive_sg = [&] { return spell(ob, s.soft ? U"я" : U"а"); };
  if (n == Number::Singular) {
    switch (c) {
      case Case::Nominative: return w;
      case Case::Genitive: return genitive_sg();
      case Case::Dative: return spell(ob, s.soft ? U"ю" : U"у");
      case Case::Accusative:
        return s.animacy == Animacy::Animate ? Result<u32string>(genitive_sg())
                                             : Result<u32string>(w);
      case Case::Instrumental: {
        char32_t last = ob.back();
        bool soft_like =
            s.soft || ((is_sibilant(last) || last == U'ц') &&
                       !t.sibilant_stressed.count(w));
        return ob + (soft_like ? U"ем" : U"ом");
      }
      case Case::Prepositional: return ob + (s.i_subtype ? U"и" : U"е");
    }
  }
  // Nouns in -анин/-янин and -енок/-онок rebuild their plural stem.
  if (ends_with(w, U"анин") || ends_with(w, U"янин")) {
    u32string ps = w.substr(0, w.size() - 2);
    switch (c) {
      case Case::Nominative: return ps + U"е";
      case Case::Genitive: return ps;
      case Case::Dative: return ps + U"ам";
      case Case::Accusative: return ps;  // animate by construction
      case Case::Instrumental: return ps + U"ами";
      case Case::Prepositional: return ps + U"ах";
    }
  }
  if (ends_with(w, U"енок") || ends_with(w, U"онок")) {
    u32string ps = w.substr(0, w.size() - 4);
    switch (c) {
      case Case::Nominative: return spell(ps, U"ята");
      case Case::Genitive: return spell(ps, U"ят");
      case Case::Dative: return spell(ps, U"ятам");
      case Case::Accusative: return spell(ps, U"ят");
      case Case::Instrumental: return spell(ps, U"ятами");
      case Case::Prepositional: return spell(ps, U"ятах");
    }
  }
  auto nominative_pl = [&]() -> u32string {
    if (t.plural_a.count(w)) return spell(ob, s.soft ? U"я" : U"а");
    return spell(ob, s.soft ? U"и" : U"ы");
  };
  switch (c) {
    case Case::Nominative: return nominative_pl();
    case Case::Genitive: return genitive_plural_masc(s, t, w);
    case Case::Dative: return spell(ob, s.soft ? U"ям" : U"ам");
    case Case::Accusative:
      return s.animacy == Animacy::Animate
                 ? Result<u32string>(genitive_plural_masc(s, t, w))
                 : Result<u32string>(nominative_pl());
    case Case::Instrumental: return spell(ob, s.soft ? U"ями" : U"ами");
    case Case::Prepositional: return spell(ob, s.soft ? U"ях" : U"ах");
  }
  return w;
}

Result<u32string> form_second_neut(const Shape& s, const u32string& w,
                                   const Tables& t, Case c, Number n) {
  const u32string& st = s.stem;
  auto genitive_pl = [&]() -> u32string {
    if (s.i_subtype) return w.substr(0, w.size() - 2) + U"ий";
    if (s.ye_subtype) return w.substr(0, w.size() - 1) + U"в";
    if (s.soft) return st + U"ей";
    return insert_fill(st);
  };
  if (n == Number::Singular) {
    switch (c) {
      case Case::Nominative: return w;
      case Case::Genitive: return spell(st, s.soft ? U"я" : U"а");
      case Case::Dative: return spell(st, s.soft ? U"ю" : U"у");
      case Case::Accusative: return w;
      case Case::Instrumental:
        return st + (s.soft || s.sib_hard ? U"ем" : U"ом");
      case Case::Prepositional: return st + (s.i_subtype ? U"и" : U"е");
    }
  }
  auto nominative_pl = [&] { return spell(st, s.soft ? U"я" : U"а"); };
  switch (c) {
    case Case::Nominative: return nominative_pl();
    case Case::Genitive: return genitive_pl();
    case Case::Dative: return spell(st, s.soft ? U"ям" : U"ам");
    case Case::Accusative:
      return s.animacy == Animacy::Animate ? Result<u32string>(genitive_pl())
                                           : Result<u32string>(nominative_pl());
    case Case::Instrumental: return spell(st, s.soft ? U"ями" : U"ами");
    case Case::Prepositional: return spell(st, s.soft ? U"ях" : U"ах");
  }
  return w;
}

Result<u32string> form_third(const Shape& s, const u32string& w, Case c,
                             Number n) {
  const u32string& ob = s.oblique;
  if (n == Number::Singular) {
    switch (c) {
      case Case::Nominative: return w;
      case Case::Genitive: return ob + U"и";
      case Case::Dative: return ob + U"и";
      case Case::Accusative: return w;
      case Case::Instrumental: return s.stem + U"ью";
      case Case::Prepositional: return ob + U"и";
    }
  }
  switch (c) {
    case Case::Nominative: return ob + U"и";
    case Case::Genitive: return ob + U"ей";
    case Case::Dative: return spell(ob, U"ям");
    case Case::Accusative:
      return s.animacy == Animacy::Animate ? ob + U"ей" : ob + U"и";
    case Case::Instrumental: return spell(ob, U"ями");
    case Case::Prepositional: return spell(ob, U"ях");
  }
  return w;
}

Result<u32string> form_mya(const Shape& s, const u32string& w, Case c,
                           Number n) {
  const u32string& st = s.stem;  // им, врем
  if (n == Number::Singular) {
    switch (c) {
      case Case::Nominative: return w;
      case Case::Genitive: return st + U"ени";
      case Case::Dative: return st + U"ени";
      case Case::Accusative: return w;
      case Case::Instrumental: return st + U"енем";
      case Case::Prepositional: return st + U"ени";
    }
  }
  switch (c) {
    case Case::Nominative: return st + U"ена";
    case Case::Genitive: return st + U"ен";
    case Case::Dative: return st + U"енам";
    case Case::Accusative: return st + U"ена";
    case Case::Instrumental: return st + U"енами";
    case Case::Prepositional: return st + U"енах";
  }
  return w;
}

Gender adjectival_gender(const u32string& w) {
  if (ends_with(w, U"ая") || ends_with(w, U"яя")) return Gender::Feminine;
  if (ends_with(w, U"ое") || ends_with(w, U"ее")) return Gender::Neuter;
  return Gender::Masculine;
}

// The adjectival lemma behind a substantivized noun: the masculine
// nominative form of the same stem.
Result<CyrillicWord> adjectival_lemma(const u32string& w) {
  Gender g = adjectival_gender(w);
  if (g == Gender::Masculine) return CyrillicWord::from_normalized(w);
  u32string base = w.substr(0, w.size() - 2);
  char32_t tail = w[w.size() - 2];  // а, я, о, е
  bool soft = tail == U'я' || tail == U'е';
  if ((soft && !is_sibilant(base.back())) || is_sibilant(base.back()) ||
      is_velar(base.back()))
    return CyrillicWord::from_normalized(base + U"ий");
  return CyrillicWord::from_normalized(base + U"ый");
}

Result<u32string> form_adjectival(const u32string& w, const Tables& t, Case c,
                                  Number n) {
  Result<CyrillicWord> lemma = adjectival_lemma(w);
  if (!lemma.ok()) return lemma.error();
  FeatureBundle b;
  b.case_ = c;
  if (n == Number::Singular) {
    b.number = Number::Singular;
    b.gender = adjectival_gender(w);
  } else {
    b.number = Number::Plural;
  }
  b.animacy = t.animate.count(w) ? Animacy::Animate : Animacy::Inanimate;
  Result<CyrillicWord> f = inflect_adjective(*lemma, b);
  if (!f.ok()) return f.error();
  return u32string(f->chars());
}

bool shape_indeclinable(const u32string& w, const Tables& t) {
  if (t.indeclinable.count(w)) return true;
  char32_t last = w.back();
  return last == U'у' || last == U'ю' || last == U'э';
}

Result<u32string> noun_form(const u32string& w, const Tables& t, Case c,
                            Number n);

Result<u32string> noun_form_whole(const u32string& w, const Tables& t, Case c,
                                  Number n) {
  if (const std::optional<u32string>* slot = irregular_lookup(w, t, c, n)) {
    if (!*slot)
      return make_error(errc::no_such_form,
                        "form is not realized: " +
                            CyrillicWord::from_normalized(w).str());
    return **slot;
  }
  if (auto it = t.pluralia.find(w); it != t.pluralia.end()) {
    if (n == Number::Singular)
      return make_error(errc::no_such_form,
                        "plurale tantum has no singular: " +
                            CyrillicWord::from_normalized(w).str());
    Animacy anim = infer_animacy(w, t);
    return pluralia_form(w, t, c, it->second, anim);
  }
  if (t.adjectival_nouns.count(w)) return form_adjectival(w, t, c, n);
  if (shape_indeclinable(w, t)) return w;
  Result<Shape> shape = classify(w, t);
  if (!shape.ok()) return shape.error();
  switch (shape->decl) {
    case Decl::First: return form_first(*shape, w, t, c, n);
    case Decl::SecondMasc: return form_second_masc(*shape, w, t, c, n);
    case Decl::SecondNeut: return form_second_neut(*shape, w, t, c, n);
    case Decl::Third: return form_third(*shape, w, c, n);
    case Decl::Mya: return form_mya(*shape, w, c, n);
  }
  return w;
}

Result<u32string> noun_form(const u32string& w, const Tables& t, Case c,
                            Number n) {
  std::size_t hyphen = w.rfind(U'-');
  if (hyphen != u32string::npos && hyphen + 1 < w.size()) {
    Result<u32string> tail =
        noun_form_whole(w.substr(hyphen + 1), t, c, n);
    if (!tail.ok()) return tail;
    return w.substr(0, hyphen + 1) + *tail;
  }
  return noun_form_whole(w, t, c, n);
}

}  // namespace

Result<NounTraits> noun_traits(const CyrillicWord& lemma) {
  const Tables& t = active_tables();
  u32string w(lemma.chars());
  std::size_t hyphen = w.rfind(U'-');
  if (hyphen != u32string::npos && hyphen + 1 < w.size())
    w = w.substr(hyphen + 1);
  if (w.empty())
    return make_error(errc::not_russian, "empty lemma");
  NounTraits tr;
  tr.animacy = infer_animacy(w, t);
  tr.pluralia_tantum = t.pluralia.count(w) > 0;
  tr.indeclinable = !tr.pluralia_tantum && shape_indeclinable(w, t);
  if (t.adjectival_nouns.count(w)) {
    tr.gender = adjectival_gender(w);
  } else if (tr.pluralia_tantum) {
    tr.gender = Gender::Masculine;  // agreement always runs in the plural
  } else {
    tr.gender = infer_gender(w, t);
  }
  return tr;
}

Result<CyrillicWord> inflect_noun(const CyrillicWord& lemma, Case c,
                                  Number n) {
  if (lemma.empty()) return make_error(errc::not_russian, "empty lemma");
  Result<u32string> f = noun_form(u32string(lemma.chars()), active_tables(),
                                  c, n);
  if (!f.ok()) return f.error();
  return CyrillicWord::from_normalized(*f);
}

Result<Paradigm> noun_paradigm(const CyrillicWord& lemma) {
  if (lemma.empty()) return make_error(errc::not_russian, "empty lemma");
  Paradigm p;
  p.lemma = lemma;
  p.pos = Pos::Noun;
  const Tables& t = active_tables();
  u32string w(lemma.chars());
  for (const FeatureBundle& b : slot_table(Pos::Noun)) {
    Result<u32string> f = noun_form(w, t, *b.case_, *b.number);
    Paradigm::Slot slot;
    slot.features = b;
    if (f.ok()) {
      slot.form = CyrillicWord::from_normalized(*f);
    } else if (f.error().code != errc::no_such_form) {
      return f.error();
    }
    p.slots.push_back(std::move(slot));
  }
  return p;
}

}  // namespace rumorph
