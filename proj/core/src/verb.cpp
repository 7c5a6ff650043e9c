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

#include "rumorph/verb.hpp"

#include <functional>

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

bool starts_with(u32string_view w, u32string_view prefix) {
  return w.size() >= prefix.size() && w.substr(0, prefix.size()) == prefix;
}

// Verbal prefixes, longest first so обо is tried before об and о.
constexpr u32string_view kPrefixes[] = {
    U"пере", U"подо", U"разо", U"пред", U"обо", U"ото", U"взо", U"изо",
    U"воз",  U"вос",  U"раз",  U"рас",  U"при", U"про", U"под", U"над",
    U"пре",  U"вы",   U"до",   U"за",   U"из",  U"ис",  U"на",  U"об",
    U"от",   U"по",   U"со",   U"вз",   U"во",  U"у",   U"о",   U"с",
    U"в"};

bool verb_shaped(u32string_view w) {
  if (w.size() < 3) return false;
  if (!ends_with(w, U"ть") && !ends_with(w, U"ти") && !ends_with(w, U"чь"))
    return false;
  for (char32_t c : w)
    if (is_vowel(c)) return true;
  return false;
}

// Depth-limited search: probe(w) itself, then every prefix-stripped
// remainder (захотеть finds хотеть). On success *prefix holds the strip.
bool strip_inner(const u32string& w, int depth, u32string* prefix,
                 const std::function<bool(const u32string&)>& probe) {
  if (depth == 0) return false;
  for (u32string_view p : kPrefixes) {
    if (!starts_with(w, p)) continue;
    u32string rest = w.substr(p.size());
    if (verb_shaped(rest) && probe(rest)) {
      *prefix = u32string(p);
      return true;
    }
    u32string sub;
    if (strip_inner(rest, depth - 1, &sub, probe)) {
      *prefix = u32string(p) + sub;
      return true;
    }
  }
  return false;
}

bool strip_search(const u32string& w, u32string* prefix,
                  const std::function<bool(const u32string&)>& probe) {
  if (probe(w)) {
    prefix->clear();
    return true;
  }
  return strip_inner(w, 3, prefix, probe);
}

// A reflexive lemma may be listed with or without its suffix.
bool list_has(const Tables::Set& s, const u32string& w) {
  return s.count(w) > 0 || s.count(w + U"ся") > 0;
}

bool list_has_stripped(const Tables::Set& s, const u32string& w) {
  u32string prefix;
  return strip_search(w, &prefix,
                      [&](const u32string& rest) { return list_has(s, rest); });
}

const IrregularVerb* find_irregular(const u32string& w, const Tables& t,
                                    u32string* prefix, u32string* rest_out) {
  const IrregularVerb* found = nullptr;
  strip_search(w, prefix, [&](const u32string& rest) {
    auto it = t.irregular_verbs.find(rest);
    if (it == t.irregular_verbs.end()) return false;
    found = &it->second;
    *rest_out = rest;
    return true;
  });
  return found;
}

const u32string* find_stem(
    const std::unordered_map<u32string, u32string>& m, const u32string& w,
    u32string* prefix, u32string* rest_out) {
  const u32string* found = nullptr;
  strip_search(w, prefix, [&](const u32string& rest) {
    auto it = m.find(rest);
    if (it == m.end()) return false;
    found = &it->second;
    *rest_out = rest;
    return true;
  });
  return found;
}

// Prefixes ending in a consonant gain о when the attached form begins with
// a cluster the base lemma did not have: с+тереть but со+тру, об+жечь but
// обо+жгу. от+стать keeps отстану because стать already starts with ст.
bool initial_cluster(const u32string& s) {
  return s.size() >= 2 && !is_vowel(s[0]) && !is_vowel(s[1]);
}

u32string o_variant(u32string_view p) {
  if (p == U"с") return U"со";
  if (p == U"в") return U"во";
  if (p == U"об") return U"обо";
  if (p == U"от") return U"ото";
  if (p == U"под") return U"подо";
  if (p == U"над") return U"надо";
  if (p == U"раз" || p == U"рас") return U"разо";
  if (p == U"из" || p == U"ис") return U"изо";
  if (p == U"вз") return U"взо";
  return u32string(p);
}

u32string attach(const u32string& prefix, const u32string& base_lemma,
                 const u32string& form) {
  if (prefix.empty()) return form;
  if (!is_vowel(prefix.back()) && initial_cluster(form) &&
      !initial_cluster(base_lemma))
    return o_variant(prefix) + form;
  return prefix + form;
}

// ---------------------------------------------------------------------------
// Aspect

Aspect infer_aspect(const u32string& w, const Tables& t) {
  if (list_has(t.biaspectual, w)) return Aspect::Biaspectual;
  if (ends_with(w, U"нуть"))
    return list_has(t.nu_imperfective, w) ? Aspect::Imperfective
                                          : Aspect::Perfective;
  if (ends_with(w, U"ывать") || ends_with(w, U"ивать"))
    return Aspect::Imperfective;
  if (ends_with(w, U"давать") || ends_with(w, U"знавать") ||
      ends_with(w, U"ставать"))
    return Aspect::Imperfective;
  if (ends_with(w, U"имать") || ends_with(w, U"инать") ||
      ends_with(w, U"ирать"))
    return Aspect::Imperfective;
  if (list_has_stripped(t.imperfective_prefixed, w))
    return Aspect::Imperfective;
  u32string prefix;
  if (strip_search(w, &prefix, [&](const u32string& rest) {
        return list_has(t.motion_iterative, rest);
      }))
    return Aspect::Imperfective;
  bool prefixed = false;
  for (u32string_view p : kPrefixes) {
    if (starts_with(w, p) && verb_shaped(w.substr(p.size()))) {
      prefixed = true;
      break;
    }
  }
  if (prefixed) return Aspect::Perfective;
  if (list_has(t.perfective_simple, w)) return Aspect::Perfective;
  return Aspect::Imperfective;
}

// ---------------------------------------------------------------------------
// Conjugation classes

enum class VClass {
  Irregular,
  Second,   // -ить and the listed -ать/-еть verbs, plus -оять
  Ova,      // рисовать, танцевать: suffix replaced by у
  Davat,    // давать/знавать/ставать: present drops ва
  Nu,       // -нуть
  Ti,       // -ти consonant stems
  St,       // -сть
  Zt,       // -зть
  Ch,       // -чь velar stems
  Ot,       // -оть: колоть, бороться
  Generic,  // vowel stem from till(2)
};

struct Conj {
  u32string inf;  // reflexive suffix stripped
  bool reflexive = false;
  Aspect aspect = Aspect::Imperfective;
  const IrregularVerb* entry = nullptr;
  u32string prefix;     // prefix stripped during entry/stem lookup
  u32string base;       // what the prefix was stripped from
  VClass cls = VClass::Generic;
  u32string stem;       // synthetic-series stem (rule verbs)
  std::array<u32string, 6> personal;
  std::array<u32string, 4> past;
};

// Second-conjugation first-person mutation, reused for -енный participles.
u32string mutate_second(const u32string& stem, bool t_shch) {
  if (stem.empty()) return stem;
  if (ends_with(stem, U"ст")) return u32string(till(stem, 2).value()) + U'щ';
  u32string out = stem;
  switch (stem.back()) {
    case U'б': case U'п': case U'в': case U'ф': case U'м':
      out += U'л';
      return out;
    case U'д': out.back() = U'ж'; return out;
    case U'т': out.back() = t_shch ? U'щ' : U'ч'; return out;
    case U'з': out.back() = U'ж'; return out;
    case U'с': out.back() = U'ш'; return out;
    default: return out;
  }
}

u32string velar_mutate(const u32string& stem) {
  u32string out = stem;
  if (out.back() == U'к') out.back() = U'ч';
  else if (out.back() == U'г') out.back() = U'ж';
  return out;
}

void build_personal(Conj* c, const Tables& t) {
  const u32string& s = c->stem;
  auto& p = c->personal;
  if (c->cls == VClass::Second) {
    bool tshch = list_has_stripped(t.t_shch, c->inf);
    u32string m = mutate_second(s, tshch);
    p[0] = m + (is_sibilant(m.back()) ? U"у" : U"ю");
    p[1] = s + U"ишь";
    p[2] = s + U"ит";
    p[3] = s + U"им";
    p[4] = s + U"ите";
    p[5] = s + (is_sibilant(s.back()) ? U"ат" : U"ят");
    return;
  }
  if (c->cls == VClass::Ch) {
    u32string mid = velar_mutate(s);
    p[0] = s + U"у";
    p[1] = mid + U"ешь";
    p[2] = mid + U"ет";
    p[3] = mid + U"ем";
    p[4] = mid + U"ете";
    p[5] = s + U"ут";
    return;
  }
  bool yu = is_vowel(s.back()) || s.back() == U'л' || c->cls == VClass::Ot;
  p[0] = s + (yu ? U"ю" : U"у");
  p[1] = s + U"ешь";
  p[2] = s + U"ет";
  p[3] = s + U"ем";
  p[4] = s + U"ете";
  p[5] = s + (yu ? U"ют" : U"ут");
}

void build_past(Conj* c, const Tables& t) {
  const u32string& w = c->inf;
  auto& p = c->past;
  switch (c->cls) {
    case VClass::Ti:
    case VClass::St:
    case VClass::Zt: {
      u32string base = c->stem;
      char32_t last = base.back();
      if (last == U'д' || last == U'т') {
        base.pop_back();  // вед -> вел, клад -> клал
        p = {base + U"л", base + U"ла", base + U"ло", base + U"ли"};
      } else {
        p = {base, base + U"ла", base + U"ло", base + U"ли"};
      }
      return;
    }
    case VClass::Ch: {
      const u32string& base = c->stem;
      p = {base, base + U"ла", base + U"ло", base + U"ли"};
      return;
    }
    case VClass::Nu:
      if (list_has_stripped(t.nu_drop_past, w)) {
        u32string base(till(w, 4).value());  // сохнуть -> сох
        p = {base, base + U"ла", base + U"ло", base + U"ли"};
        return;
      }
      break;
    default:
      break;
  }
  u32string base(till(w, 2).value());
  p = {base + U"л", base + U"ла", base + U"ло", base + U"ли"};
}

Result<Conj> analyze(const CyrillicWord& infinitive) {
  const Tables& t = active_tables();
  Conj c;
  u32string w(infinitive.chars());
  if (w.empty()) return make_error(errc::not_russian, "empty lemma");
  if (ends_with(w, U"ся") || ends_with(w, U"сь")) {
    c.reflexive = true;
    w = w.substr(0, w.size() - 2);
  }
  c.inf = w;
  if (!verb_shaped(w))
    return make_error(errc::no_such_form,
                      "not an infinitive: " + infinitive.str());

  if (const IrregularVerb* e = find_irregular(w, t, &c.prefix, &c.base)) {
    c.entry = e;
    c.cls = VClass::Irregular;
    c.aspect = c.prefix.empty() ? e->aspect.value_or(Aspect::Imperfective)
                                : Aspect::Perfective;
    for (int i = 0; i < 6; ++i) {
      if (!e->personal[i])
        return make_error(errc::parse, "incomplete entry: " + infinitive.str());
      c.personal[i] = attach(c.prefix, c.base, *e->personal[i]);
    }
    for (int i = 0; i < 4; ++i) {
      if (!e->past[i])
        return make_error(errc::parse, "incomplete entry: " + infinitive.str());
      c.past[i] = attach(c.prefix, c.base, *e->past[i]);
    }
    return c;
  }

  c.aspect = infer_aspect(w, t);

  // Class and present stem.
  if (const u32string* st = find_stem(t.mutating_stems, w, &c.prefix, &c.base)) {
    c.cls = VClass::Generic;
    c.stem = attach(c.prefix, c.base, *st);
  } else if (const u32string* st =
                 find_stem(t.velar_stems, w, &c.prefix, &c.base)) {
    c.cls = VClass::Ch;
    c.stem = attach(c.prefix, c.base, *st);
  } else if (const u32string* st =
                 find_stem(t.ti_stems, w, &c.prefix, &c.base)) {
    c.cls = ends_with(w, U"ти") ? VClass::Ti : VClass::St;
    c.stem = attach(c.prefix, c.base, *st);
  } else if (ends_with(w, U"оять")) {
    c.cls = VClass::Second;
    c.stem = u32string(till(w, 3).value());  // сто-ять
  } else if (ends_with(w, U"ить") && w.size() >= 4) {
    c.cls = VClass::Second;
    c.stem = u32string(till(w, 3).value());
  } else if (list_has_stripped(t.second_conj, w)) {
    c.cls = VClass::Second;
    c.stem = u32string(till(w, 3).value());
  } else if (ends_with(w, U"давать") || ends_with(w, U"знавать") ||
             ends_with(w, U"ставать")) {
    c.cls = VClass::Davat;
    c.stem = u32string(till(w, 4).value());  // да-вать -> даю
  } else if (ends_with(w, U"овать") && w.size() >= 6) {
    c.cls = VClass::Ova;
    c.stem = u32string(till(w, 5).value());
    c.stem += is_vowel(c.stem.back()) ? U'ю' : U'у';
  } else if (ends_with(w, U"евать") && w.size() >= 6 &&
             (is_sibilant(w[w.size() - 6]) || w[w.size() - 6] == U'ц')) {
    c.cls = VClass::Ova;
    c.stem = u32string(till(w, 5).value()) + U'у';  // танцевать -> танцу
  } else if (ends_with(w, U"нуть")) {
    c.cls = VClass::Nu;
    c.stem = u32string(till(w, 3).value());
  } else if (ends_with(w, U"ти")) {
    c.cls = VClass::Ti;
    c.stem = u32string(till(w, 2).value());  // нести -> нес
  } else if (ends_with(w, U"зть")) {
    c.cls = VClass::Zt;
    c.stem = u32string(till(w, 2).value());  // лезть -> лез
  } else if (ends_with(w, U"сть")) {
    c.cls = VClass::St;
    c.stem = u32string(till(w, 2).value());
  } else if (ends_with(w, U"чь")) {
    c.cls = VClass::Ch;
    c.stem = u32string(till(w, 2).value()) + U'к';
  } else if (ends_with(w, U"оть")) {
    c.cls = VClass::Ot;
    c.stem = u32string(till(w, 3).value());  // кол-оть
  } else if (ends_with(w, U"ять") && w.size() >= 4 &&
             is_vowel(w[w.size() - 4])) {
    c.cls = VClass::Generic;
    c.stem = u32string(till(w, 3).value());  // се-ять -> сею
  } else if (ends_with(w, U"уть")) {
    c.cls = VClass::Generic;
    c.stem = u32string(till(w, 2).value());  // дуть -> дую
  } else {
    c.cls = VClass::Generic;
    c.stem = u32string(till(w, 2).value());
  }

  build_personal(&c, t);
  build_past(&c, t);
  return c;
}

// Reflexive suffix: ся after a consonant, сь after a vowel.
u32string reflex(const Conj& c, u32string form) {
  if (!c.reflexive) return form;
  form += is_vowel(form.back()) ? U"сь" : U"ся";
  return form;
}

u32string full_infinitive(const Conj& c) {
  return c.reflexive ? c.inf + U"ся" : c.inf;
}

constexpr u32string_view kBudu[6] = {U"буду", U"будешь", U"будет",
                                     U"будем", U"будете", U"будут"};

std::size_t person_index(Person p, Number n) {
  std::size_t i = p == Person::First ? 0 : p == Person::Second ? 1 : 2;
  return n == Number::Plural ? i + 3 : i;
}

bool series_is_future(const Conj& c) {
  if (c.entry && c.entry->synthetic_future) return true;
  return c.aspect == Aspect::Perfective;
}

bool analytic_allowed(const Conj& c) {
  if (c.entry && c.entry->synthetic_future) return false;  // буду быть
  return c.aspect != Aspect::Perfective;
}

Result<u32string> synthetic_form(const Conj& c, Person p, Number n) {
  return reflex(c, c.personal[person_index(p, n)]);
}

Result<u32string> analytic_form(const Conj& c, Person p, Number n) {
  if (!analytic_allowed(c))
    return make_error(errc::no_such_form,
                      "no analytic future: " +
                          CyrillicWord::from_normalized(c.inf).str());
  return u32string(kBudu[person_index(p, n)]) + U' ' + full_infinitive(c);
}

// ---------------------------------------------------------------------------
// Imperative

Result<std::array<u32string, 2>> build_imperative(const Conj& c,
                                                  const Tables& t) {
  auto no_form = [&] {
    return make_error(errc::no_such_form,
                      "no imperative: " +
                          CyrillicWord::from_normalized(c.inf).str());
  };
  u32string sg;
  if (c.entry) {
    if (c.entry->no_imperative) return no_form();
    if (c.entry->imperative[0]) {
      sg = attach(c.prefix, c.base, *c.entry->imperative[0]);
      return std::array<u32string, 2>{sg, sg + U"те"};
    }
  }
  if (list_has_stripped(t.no_imperative, c.inf)) return no_form();
  if (c.cls == VClass::Davat) {
    sg = u32string(till(c.inf, 4).value()) + U"вай";
    return std::array<u32string, 2>{sg, sg + U"те"};
  }
  u32string s = c.stem;
  if (c.entry) s = u32string(till(c.personal[5], 2).value());
  if (is_vowel(s.back())) {
    sg = s + U"й";
  } else if (list_has_stripped(t.imperative_soft, c.inf)) {
    sg = s + U"ь";
  } else if (c.cls == VClass::Nu && c.aspect == Aspect::Perfective &&
             s.size() >= 2 && is_vowel(s[s.size() - 2])) {
    sg = s + U"ь";  // кинь, двинь; but верни, прыгни
  } else {
    sg = s + U"и";
  }
  return std::array<u32string, 2>{sg, sg + U"те"};
}

// ---------------------------------------------------------------------------
// Gerunds

Result<u32string> build_iger(const Conj& c, const Tables& t) {
  auto no_form = [&] {
    return make_error(errc::no_such_form,
                      "no imperfective gerund: " +
                          CyrillicWord::from_normalized(c.inf).str());
  };
  if (c.entry) {
    if (c.entry->no_iger) return no_form();
    if (c.entry->iger) return attach(c.prefix, c.base, *c.entry->iger);
  }
  if (c.aspect == Aspect::Perfective) return no_form();
  if (list_has_stripped(t.no_gerund, c.inf)) return no_form();
  if (c.cls == VClass::Davat) return u32string(till(c.inf, 4).value()) + U"вая";
  if (c.cls == VClass::Nu || c.cls == VClass::Ch) return no_form();
  u32string s = c.stem;
  if (c.entry) s = u32string(till(c.personal[5], 2).value());
  return s + (is_sibilant(s.back()) ? U"а" : U"я");
}

// The perfective-gerund construction runs on any verb shape; BF selection
// follows the stem class. Vowel stems take в, consonant stems ши.
Result<u32string> build_pger(const Conj& c, const Tables& t) {
  if (c.entry) {
    if (c.entry->no_pger)
      return make_error(errc::no_such_form,
                        "no perfective gerund: " +
                            CyrillicWord::from_normalized(c.inf).str());
    if (c.entry->pger) return attach(c.prefix, c.base, *c.entry->pger);
    const u32string& m = c.past[0];
    if (m.back() == U'л') return u32string(till(m, 1).value()) + U"в";
    return m + U"ши";
  }
  const u32string& w = c.inf;
  switch (c.cls) {
    case VClass::Ti:
    case VClass::Zt:
    case VClass::Ch:
      return c.stem + U"ши";  // принесши, лезши, испекши
    case VClass::St:
      return u32string(till(w, 3).value()) + U"в";  // упав, клав
    case VClass::Nu:
      if (list_has_stripped(t.nu_drop_past, w))
        return u32string(till(w, 4).value()) + U"ши";  // засохши
      return u32string(till(w, 2).value()) + U"в";
    default:
      return u32string(till(w, 2).value()) + U"в";  // решав, купив
  }
}

Result<u32string> reflexive_gerund(const Conj& c, u32string g) {
  if (!c.reflexive) return g;
  if (g.back() == U'в') return g + U"шись";  // решавшись
  return g + U"сь";                          // обжегшись, решаясь
}

// ---------------------------------------------------------------------------
// Participle lemmas

Result<u32string> pres_act_stem(const Conj& c) {
  if (c.aspect == Aspect::Perfective)
    return make_error(errc::no_such_form,
                      "no present participle of a perfective verb: " +
                          CyrillicWord::from_normalized(c.inf).str());
  if (c.entry && c.entry->pres_act)
    return attach(c.prefix, c.base, *c.entry->pres_act);
  return u32string(till(c.personal[5], 1).value()) + U"щий";
}

Result<u32string> past_act_stem(const Conj& c, const Tables& t) {
  if (c.entry && c.entry->past_act)
    return attach(c.prefix, c.base, *c.entry->past_act);
  switch (c.cls) {
    case VClass::Ti:
    case VClass::Ch:
    case VClass::Zt:
      return c.stem + U"ший";  // ведший, пекший, лезший
    case VClass::Nu:
      if (list_has_stripped(t.nu_drop_past, c.inf))
        return c.past[0] + U"ший";  // засохший
      break;
    default:
      break;
  }
  const u32string& m = c.past[0];
  if (m.back() == U'л') return u32string(till(m, 1).value()) + U"вший";
  return m + U"ший";
}

Result<u32string> past_pass_stem(const Conj& c, const Tables& t) {
  auto no_form = [&] {
    return make_error(errc::no_such_form,
                      "no passive participle: " +
                          CyrillicWord::from_normalized(c.inf).str());
  };
  if (c.reflexive) return no_form();
  if (c.entry) {
    if (!c.entry->past_pass) return no_form();
    return attach(c.prefix, c.base, *c.entry->past_pass);
  }
  const u32string& w = c.inf;
  if (ends_with(w, U"ить")) {
    bool tshch = list_has_stripped(t.t_shch, w);
    return mutate_second(u32string(till(w, 3).value()), tshch) + U"енный";
  }
  if (ends_with(w, U"нуть") || ends_with(w, U"ыть") || ends_with(w, U"уть") ||
      ends_with(w, U"оть"))
    return u32string(till(w, 2).value()) + U"тый";
  if (ends_with(w, U"ать") || ends_with(w, U"ять"))
    return u32string(till(w, 2).value()) + U"нный";
  if (ends_with(w, U"еть"))
    return u32string(till(w, 3).value()) + U"енный";
  switch (c.cls) {
    case VClass::Ti:
    case VClass::St:
    case VClass::Zt:
      return c.stem + U"енный";  // внесенный, украденный
    case VClass::Ch:
      return velar_mutate(c.stem) + U"енный";  // испеченный
    default:
      return no_form();
  }
}

Result<u32string> participle_lemma_impl(const Conj& c, ParticipleKind kind,
                                        const Tables& t) {
  Result<u32string> base = [&]() -> Result<u32string> {
    switch (kind) {
      case ParticipleKind::PresentActive: return pres_act_stem(c);
      case ParticipleKind::PastActive: return past_act_stem(c, t);
      case ParticipleKind::PastPassive: return past_pass_stem(c, t);
    }
    return make_error(errc::invalid_slot, "unknown participle kind");
  }();
  if (!base.ok()) return base;
  if (c.reflexive) return *base + U"ся";
  return base;
}

// Short passive forms: прочитанный -> прочитан, тянутый -> тянут.
Result<std::array<u32string, 4>> short_passive(const u32string& lemma) {
  u32string base;
  if (ends_with(lemma, U"нный"))
    base = u32string(till(lemma, 3).value());
  else if (ends_with(lemma, U"тый"))
    base = u32string(till(lemma, 2).value());
  else
    return make_error(errc::no_such_form, "no short form");
  return std::array<u32string, 4>{base, base + U"а", base + U"о", base + U"ы"};
}

Result<Conj> analyze_checked(const CyrillicWord& infinitive) {
  if (infinitive.empty()) return make_error(errc::not_russian, "empty lemma");
  return analyze(infinitive);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface

Result<Aspect> get_perfectness(const CyrillicWord& infinitive) {
  Result<Conj> c = analyze_checked(infinitive);
  if (!c.ok()) return c.error();
  return c->aspect;
}

Result<CyrillicWord> conjugate(const CyrillicWord& infinitive,
                               const FeatureBundle& features) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  const Conj& c = *cr;
  const FeatureBundle& b = features;

  if (b.voice == Voice::Passive)
    return make_error(errc::no_such_form, "reserved slot");

  if (!b.tense) {
    if (b.person || b.number || b.gender || b.case_ || b.degree)
      return make_error(errc::invalid_slot, "not a verb slot: " + b.tag());
    return CyrillicWord::from_normalized(full_infinitive(c));
  }

  if (*b.tense == Tense::Past) {
    std::size_t i;
    if (b.number == Number::Plural) {
      i = 3;
    } else if (b.gender) {
      i = *b.gender == Gender::Masculine  ? 0
          : *b.gender == Gender::Feminine ? 1
                                          : 2;
    } else {
      return make_error(errc::invalid_slot,
                        "past tense needs gender or plural: " + b.tag());
    }
    return CyrillicWord::from_normalized(reflex(c, c.past[i]));
  }

  if (!b.person || !b.number)
    return make_error(errc::invalid_slot,
                      "personal form needs person and number: " + b.tag());

  if (*b.tense == Tense::Present) {
    if (series_is_future(c))
      return make_error(errc::no_such_form,
                        "no present tense: " + infinitive.str());
    Result<u32string> f = synthetic_form(c, *b.person, *b.number);
    if (!f.ok()) return f.error();
    return CyrillicWord::from_normalized(*f);
  }

  // Future.
  bool analytic_slot = b.aspect == Aspect::Imperfective;
  Result<u32string> f =
      analytic_slot ? analytic_form(c, *b.person, *b.number)
      : series_is_future(c) || c.aspect == Aspect::Biaspectual
          ? synthetic_form(c, *b.person, *b.number)
          : analytic_form(c, *b.person, *b.number);
  if (!f.ok()) return f.error();
  return CyrillicWord::from_normalized(*f);
}

Result<Paradigm> verb_paradigm(const CyrillicWord& infinitive) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Paradigm p;
  p.lemma = infinitive;
  p.pos = Pos::Verb;
  for (const FeatureBundle& b : slot_table(Pos::Verb)) {
    Paradigm::Slot slot;
    slot.features = b;
    Result<CyrillicWord> f = conjugate(infinitive, b);
    if (f.ok()) {
      slot.form = std::move(*f);
    } else if (f.error().code != errc::no_such_form) {
      return f.error();
    }
    p.slots.push_back(std::move(slot));
  }
  return p;
}

Result<CyrillicWord> imperative(const CyrillicWord& infinitive, Number n) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Result<std::array<u32string, 2>> imp =
      build_imperative(*cr, active_tables());
  if (!imp.ok()) return imp.error();
  const u32string& base = (*imp)[n == Number::Plural ? 1 : 0];
  return CyrillicWord::from_normalized(reflex(*cr, base));
}

Result<Paradigm> imperative_paradigm(const CyrillicWord& infinitive) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Paradigm p;
  p.lemma = infinitive;
  p.pos = Pos::Imperative;
  Result<std::array<u32string, 2>> imp =
      build_imperative(*cr, active_tables());
  for (const FeatureBundle& b : slot_table(Pos::Imperative)) {
    Paradigm::Slot slot;
    slot.features = b;
    if (imp.ok()) {
      const u32string& base = (*imp)[b.number == Number::Plural ? 1 : 0];
      slot.form = CyrillicWord::from_normalized(reflex(*cr, base));
    }
    p.slots.push_back(std::move(slot));
  }
  if (!imp.ok() && imp.error().code != errc::no_such_form) return imp.error();
  return p;
}

Result<CyrillicWord> perfective_gerund(const CyrillicWord& infinitive) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Result<u32string> g = build_pger(*cr, active_tables());
  if (!g.ok()) return g.error();
  Result<u32string> rg = reflexive_gerund(*cr, std::move(*g));
  if (!rg.ok()) return rg.error();
  return CyrillicWord::from_normalized(*rg);
}

Result<CyrillicWord> imperfective_gerund(const CyrillicWord& infinitive) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Result<u32string> g = build_iger(*cr, active_tables());
  if (!g.ok()) return g.error();
  Result<u32string> rg = reflexive_gerund(*cr, std::move(*g));
  if (!rg.ok()) return rg.error();
  return CyrillicWord::from_normalized(*rg);
}

Result<Paradigm> gerund_paradigm(const CyrillicWord& infinitive) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Paradigm p;
  p.lemma = infinitive;
  p.pos = Pos::Gerund;
  for (const FeatureBundle& b : slot_table(Pos::Gerund)) {
    Paradigm::Slot slot;
    slot.features = b;
    Result<CyrillicWord> f = b.aspect == Aspect::Perfective
                                 ? perfective_gerund(infinitive)
                                 : imperfective_gerund(infinitive);
    if (f.ok()) {
      slot.form = std::move(*f);
    } else if (f.error().code != errc::no_such_form) {
      return f.error();
    }
    p.slots.push_back(std::move(slot));
  }
  return p;
}

Result<CyrillicWord> participle_lemma(const CyrillicWord& infinitive,
                                      ParticipleKind kind) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Result<u32string> l = participle_lemma_impl(*cr, kind, active_tables());
  if (!l.ok()) return l.error();
  return CyrillicWord::from_normalized(*l);
}

Result<CyrillicWord> participle(const CyrillicWord& infinitive,
                                ParticipleKind kind, GenderOrPlural g, Case c,
                                Animacy animacy) {
  Result<CyrillicWord> lemma = participle_lemma(infinitive, kind);
  if (!lemma.ok()) return lemma.error();
  FeatureBundle b = adjective_long_slot(c, g);
  b.animacy = animacy;
  return inflect_adjective(*lemma, b);
}

Result<CyrillicWord> participle_short(const CyrillicWord& infinitive,
                                      GenderOrPlural g) {
  Result<CyrillicWord> lemma =
      participle_lemma(infinitive, ParticipleKind::PastPassive);
  if (!lemma.ok()) return lemma.error();
  Result<std::array<u32string, 4>> shorts = short_passive(lemma->chars());
  if (!shorts.ok()) return shorts.error();
  return CyrillicWord::from_normalized(
      (*shorts)[static_cast<std::size_t>(g)]);
}

Result<Paradigm> participle_paradigm(const CyrillicWord& infinitive,
                                     ParticipleKind kind) {
  Result<Conj> cr = analyze_checked(infinitive);
  if (!cr.ok()) return cr.error();
  Pos pos = kind == ParticipleKind::PresentActive ? Pos::ParticiplePresAct
            : kind == ParticipleKind::PastActive  ? Pos::ParticiplePastAct
                                                  : Pos::ParticiplePastPass;
  Paradigm p;
  p.lemma = infinitive;
  p.pos = pos;
  Result<u32string> lemma =
      participle_lemma_impl(*cr, kind, active_tables());
  if (!lemma.ok() && lemma.error().code != errc::no_such_form)
    return lemma.error();

  Result<std::array<u32string, 4>> shorts =
      make_error(errc::no_such_form, "no short form");
  if (lemma.ok() && kind == ParticipleKind::PastPassive)
    shorts = short_passive(*lemma);

  for (const FeatureBundle& b : slot_table(pos)) {
    Paradigm::Slot slot;
    slot.features = b;
    if (lemma.ok()) {
      if (b.case_) {
        Result<CyrillicWord> f =
            inflect_adjective(CyrillicWord::from_normalized(*lemma), b);
        if (f.ok())
          slot.form = std::move(*f);
        else if (f.error().code != errc::no_such_form)
          return f.error();
      } else if (shorts.ok()) {
        GenderOrPlural g = b.number == Number::Plural
                               ? GenderOrPlural::Plural
                               : to_gender_or_plural(
                                     b.gender.value_or(Gender::Masculine));
        slot.form = CyrillicWord::from_normalized(
            (*shorts)[static_cast<std::size_t>(g)]);
      }
    }
    p.slots.push_back(std::move(slot));
  }
  return p;
}

}  // namespace rumorph
