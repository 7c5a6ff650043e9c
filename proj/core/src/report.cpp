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

#include "rumorph/report.hpp"

#include <optional>

#include "rumorph/adjective.hpp"
#include "rumorph/agreement.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/verb.hpp"

namespace rumorph {

namespace {

const char* kMonthNominative[12] = {
    "январь", "февраль", "март",     "апрель",  "май",    "июнь",
    "июль",   "август",  "сентябрь", "октябрь", "ноябрь", "декабрь"};

struct Resolved {
  std::string text;
  // Agreement facts exported by noun-like placeholders.
  std::optional<Gender> gender;
  std::optional<Animacy> animacy;
  std::optional<Case> case_;
  std::optional<Number> number;
};

Result<std::int64_t> int_field(const DataDoc& data, const std::string& key) {
  auto it = data.find(key);
  if (it == data.end())
    return make_error(errc::missing_field, "no data for {" + key + "}");
  if (const std::int64_t* v = std::get_if<std::int64_t>(&it->second))
    return *v;
  return make_error(errc::bad_field, "field " + key + " is not an integer");
}

Result<std::string> text_field(const DataDoc& data, const std::string& key) {
  auto it = data.find(key);
  if (it == data.end())
    return make_error(errc::missing_field, "no data for {" + key + "}");
  if (const std::string* v = std::get_if<std::string>(&it->second)) return *v;
  return make_error(errc::bad_field, "field " + key + " is not text");
}

using Args = std::map<std::string, std::string>;

template <class T>
Result<T> parse_arg(const Args& args, const std::string& key, T dflt,
                    std::optional<T> (*from)(std::string_view)) {
  auto it = args.find(key);
  if (it == args.end()) return dflt;
  std::optional<T> v = from(it->second);
  if (!v)
    return make_error(errc::bad_field, "bad " + key + "= value: " + it->second);
  return *v;
}

Result<CyrillicWord> lemma_arg(const Args& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end())
    return make_error(errc::bad_field, "placeholder needs " + key + "=");
  return CyrillicWord::parse(it->second);
}

Result<Resolved> resolve_noun(const Template::Placeholder& ph,
                              const DataDoc& data) {
  Result<std::string> lemma_text = text_field(data, ph.name);
  if (!lemma_text.ok()) return lemma_text.error();
  Result<CyrillicWord> lemma = CyrillicWord::parse(*lemma_text);
  if (!lemma.ok()) return lemma.error();
  Result<Case> c = parse_arg(ph.args, "case", Case::Nominative, case_from);
  if (!c.ok()) return c.error();
  Result<Number> n =
      parse_arg(ph.args, "number", Number::Singular, number_from);
  if (!n.ok()) return n.error();
  Result<NounTraits> traits = noun_traits(*lemma);
  if (!traits.ok()) return traits.error();
  Result<CyrillicWord> form = inflect_noun(*lemma, *c, *n);
  if (!form.ok()) return form.error();
  Resolved r;
  r.text = form->str();
  r.gender = traits->gender;
  r.animacy = traits->animacy;
  r.case_ = *c;
  r.number = traits->pluralia_tantum ? Number::Plural : *n;
  return r;
}

Result<Resolved> resolve_adjective(const Template::Placeholder& ph,
                                   const DataDoc& data,
                                   const std::map<std::string, Resolved>& done) {
  Result<std::string> lemma_text = text_field(data, ph.name);
  if (!lemma_text.ok()) return lemma_text.error();
  Result<CyrillicWord> lemma = CyrillicWord::parse(*lemma_text);
  if (!lemma.ok()) return lemma.error();

  Case c = Case::Nominative;
  GenderOrPlural g = GenderOrPlural::Masculine;
  Animacy a = Animacy::Inanimate;
  auto link = ph.args.find("link");
  if (link != ph.args.end()) {
    auto it = done.find(link->second);
    if (it == done.end() || !it->second.gender)
      return make_error(errc::bad_field,
                        "link target is not a resolved noun: " + link->second);
    const Resolved& target = it->second;
    c = target.case_.value_or(Case::Nominative);
    g = target.number == Number::Plural
            ? GenderOrPlural::Plural
            : to_gender_or_plural(*target.gender);
    a = target.animacy.value_or(Animacy::Inanimate);
  } else {
    Result<Case> cr = parse_arg(ph.args, "case", Case::Nominative, case_from);
    if (!cr.ok()) return cr.error();
    c = *cr;
    Result<Number> nr =
        parse_arg(ph.args, "number", Number::Singular, number_from);
    if (!nr.ok()) return nr.error();
    Result<Gender> gr =
        parse_arg(ph.args, "gender", Gender::Masculine, gender_from);
    if (!gr.ok()) return gr.error();
    g = *nr == Number::Plural ? GenderOrPlural::Plural
                              : to_gender_or_plural(*gr);
    Result<Animacy> ar =
        parse_arg(ph.args, "animacy", Animacy::Inanimate, animacy_from);
    if (!ar.ok()) return ar.error();
    a = *ar;
  }
  FeatureBundle b = adjective_long_slot(c, g);
  b.animacy = a;
  Result<CyrillicWord> form = inflect_adjective(*lemma, b);
  if (!form.ok()) return form.error();
  Resolved r;
  r.text = form->str();
  return r;
}

Result<Resolved> resolve_verb(const Template::Placeholder& ph,
                              const DataDoc& data,
                              const std::map<std::string, Resolved>& done) {
  Result<std::string> lemma_text = text_field(data, ph.name);
  if (!lemma_text.ok()) return lemma_text.error();
  Result<CyrillicWord> lemma = CyrillicWord::parse(*lemma_text);
  if (!lemma.ok()) return lemma.error();
  Result<Tense> t = parse_arg(ph.args, "tense", Tense::Present, tense_from);
  if (!t.ok()) return t.error();

  FeatureBundle b;
  b.tense = *t;
  auto link = ph.args.find("link");
  if (link != ph.args.end()) {
    auto it = done.find(link->second);
    if (it == done.end() || !it->second.gender)
      return make_error(errc::bad_field,
                        "link target is not a resolved noun: " + link->second);
    const Resolved& target = it->second;
    Number n = target.number.value_or(Number::Singular);
    if (*t == Tense::Past) {
      b.number = n;
      if (n == Number::Singular) b.gender = *target.gender;
    } else {
      b.person = Person::Third;
      b.number = n;
    }
  } else {
    if (*t == Tense::Past) {
      Result<Number> nr =
          parse_arg(ph.args, "number", Number::Singular, number_from);
      if (!nr.ok()) return nr.error();
      b.number = *nr;
      if (*nr == Number::Singular) {
        Result<Gender> gr =
            parse_arg(ph.args, "gender", Gender::Masculine, gender_from);
        if (!gr.ok()) return gr.error();
        b.gender = *gr;
      }
    } else {
      Result<Person> pr =
          parse_arg(ph.args, "person", Person::Third, person_from);
      if (!pr.ok()) return pr.error();
      Result<Number> nr =
          parse_arg(ph.args, "number", Number::Singular, number_from);
      if (!nr.ok()) return nr.error();
      b.person = *pr;
      b.number = *nr;
    }
  }
  Result<CyrillicWord> form = conjugate(*lemma, b);
  if (!form.ok()) return form.error();
  Resolved r;
  r.text = form->str();
  return r;
}

Result<Resolved> resolve_number(const Template::Placeholder& ph,
                                const DataDoc& data, bool ordinal_kind) {
  Result<std::int64_t> v = int_field(data, ph.name);
  if (!v.ok()) return v.error();
  Result<Case> c = parse_arg(ph.args, "case", Case::Nominative, case_from);
  if (!c.ok()) return c.error();
  Result<Gender> g =
      parse_arg(ph.args, "gender", Gender::Masculine, gender_from);
  if (!g.ok()) return g.error();
  bool negative = *v < 0;
  std::int64_t magnitude = negative ? -*v : *v;
  if (magnitude > 9999)
    return make_error(errc::range,
                      "field " + ph.name + " out of numeral range");
  Result<CyrillicWord> words =
      ordinal_kind
          ? ordinal(static_cast<int>(magnitude), to_gender_or_plural(*g), *c,
                    Animacy::Inanimate)
          : cardinal(static_cast<int>(magnitude), *c, *g, Animacy::Inanimate);
  if (!words.ok()) return words.error();
  Resolved r;
  r.text = negative ? "минус " + words->str() : words->str();
  return r;
}

Result<Resolved> resolve_quantity(const Template::Placeholder& ph,
                                  const DataDoc& data, bool digits) {
  Result<std::int64_t> v = int_field(data, ph.name);
  if (!v.ok()) return v.error();
  Result<CyrillicWord> noun = lemma_arg(ph.args, "noun");
  if (!noun.ok()) return noun.error();
  Result<Case> c = parse_arg(ph.args, "case", Case::Nominative, case_from);
  if (!c.ok()) return c.error();
  bool negative = *v < 0;
  std::int64_t magnitude = negative ? -*v : *v;
  if (magnitude > 9999)
    return make_error(errc::range,
                      "field " + ph.name + " out of numeral range");
  Result<CyrillicWord> phrase =
      quantity_phrase(static_cast<int>(magnitude), *noun, *c);
  if (!phrase.ok()) return phrase.error();
  std::string text;
  if (digits) {
    // Digits stay digits; only the counted noun (the final word) survives.
    std::string words = phrase->str();
    std::size_t space = words.rfind(' ');
    text = std::to_string(*v) + words.substr(space);
  } else {
    text = negative ? "минус " + phrase->str() : phrase->str();
  }
  Resolved r;
  r.text = std::move(text);
  return r;
}

Result<Resolved> resolve_date(const Template::Placeholder& ph,
                              const DataDoc& data) {
  Result<std::string> iso = text_field(data, ph.name);
  if (!iso.ok()) return iso.error();
  const std::string& s = *iso;
  auto bad = [&] {
    return make_error(errc::bad_field, "field " + ph.name +
                                           " is not an ISO date: " + s);
  };
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return bad();
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (s[i] < '0' || s[i] > '9') return bad();
  int year = std::stoi(s.substr(0, 4));
  int month = std::stoi(s.substr(5, 2));
  int day = std::stoi(s.substr(8, 2));
  if (month < 1 || month > 12 || day < 1 || day > 31) return bad();

  Result<CyrillicWord> day_word =
      ordinal(day, GenderOrPlural::Neuter, Case::Nominative,
              Animacy::Inanimate);
  if (!day_word.ok()) return day_word.error();
  Result<CyrillicWord> month_lemma =
      CyrillicWord::parse(kMonthNominative[month - 1]);
  if (!month_lemma.ok()) return month_lemma.error();
  Result<CyrillicWord> month_word =
      inflect_noun(*month_lemma, Case::Genitive, Number::Singular);
  if (!month_word.ok()) return month_word.error();

  std::string text = day_word->str() + " " + month_word->str();
  if (year > 0 && year <= 9999) {
    Result<CyrillicWord> year_word = ordinal(
        year, GenderOrPlural::Masculine, Case::Genitive, Animacy::Inanimate);
    if (!year_word.ok()) return year_word.error();
    text += " " + year_word->str() + " года";
  }
  Resolved r;
  r.text = std::move(text);
  return r;
}

Result<Resolved> resolve_text(const Template::Placeholder& ph,
                              const DataDoc& data) {
  Result<std::string> v = text_field(data, ph.name);
  if (!v.ok()) return v.error();
  Resolved r;
  r.text = *v;
  return r;
}

bool is_linked(const Template::Placeholder& ph) {
  return ph.args.count("link") > 0;
}

Result<Resolved> resolve(const Template::Placeholder& ph, const DataDoc& data,
                         const std::map<std::string, Resolved>& done) {
  if (ph.type == "noun") return resolve_noun(ph, data);
  if (ph.type == "adjective") return resolve_adjective(ph, data, done);
  if (ph.type == "verb") return resolve_verb(ph, data, done);
  if (ph.type == "number") return resolve_number(ph, data, false);
  if (ph.type == "ordinal") return resolve_number(ph, data, true);
  if (ph.type == "quantity") return resolve_quantity(ph, data, false);
  if (ph.type == "count") return resolve_quantity(ph, data, true);
  if (ph.type == "date") return resolve_date(ph, data);
  if (ph.type == "text") return resolve_text(ph, data);
  return make_error(errc::parse, "unknown placeholder type: " + ph.type);
}

}  // namespace

Result<Template> Template::parse(std::string_view source) {
  Template tpl;
  tpl.source_ = std::string(source);
  std::string chunk;
  std::size_t i = 0;
  while (i < source.size()) {
    char ch = source[i];
    if (ch != '{') {
      if (ch == '}')
        return make_error(errc::parse,
                          "stray } at offset " + std::to_string(i));
      chunk += ch;
      ++i;
      continue;
    }
    std::size_t close = source.find('}', i);
    if (close == std::string_view::npos)
      return make_error(errc::parse,
                        "unterminated { at offset " + std::to_string(i));
    std::string_view body = source.substr(i + 1, close - i - 1);
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos || colon == 0)
      return make_error(errc::parse, "placeholder needs name:type - {" +
                                         std::string(body) + "}");
    Placeholder ph;
    ph.name = std::string(body.substr(0, colon));
    std::string_view rest = body.substr(colon + 1);
    std::size_t bar = rest.find('|');
    ph.type = std::string(rest.substr(0, bar));
    if (ph.type.empty())
      return make_error(errc::parse, "placeholder needs name:type - {" +
                                         std::string(body) + "}");
    if (bar != std::string_view::npos) {
      std::string_view args = rest.substr(bar + 1);
      while (!args.empty()) {
        std::size_t comma = args.find(',');
        std::string_view pair = args.substr(0, comma);
        std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos || eq == 0)
          return make_error(errc::parse, "placeholder argument needs key=value - {" +
                                             std::string(body) + "}");
        ph.args[std::string(pair.substr(0, eq))] =
            std::string(pair.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        args = args.substr(comma + 1);
      }
    }
    tpl.chunks_.push_back(std::move(chunk));
    chunk.clear();
    tpl.holders_.push_back(std::move(ph));
    i = close + 1;
  }
  tpl.chunks_.push_back(std::move(chunk));

  // Every agreement link must name another placeholder.
  for (const Placeholder& ph : tpl.holders_) {
    auto link = ph.args.find("link");
    if (link == ph.args.end()) continue;
    bool found = false;
    for (const Placeholder& other : tpl.holders_)
      if (&other != &ph && other.name == link->second) found = true;
    if (!found)
      return make_error(errc::parse,
                        "link to unknown placeholder: " + link->second);
  }
  return tpl;
}

Result<std::string> render_report(const Template& tpl, const DataDoc& data) {
  std::map<std::string, Resolved> resolved;
  // Unlinked placeholders first so links can read their facts.
  for (int pass = 0; pass < 2; ++pass) {
    for (const Template::Placeholder& ph : tpl.placeholders()) {
      if (is_linked(ph) != (pass == 1)) continue;
      if (resolved.count(ph.name)) continue;
      Result<Resolved> r = resolve(ph, data, resolved);
      if (!r.ok()) return r.error();
      resolved[ph.name] = std::move(*r);
    }
  }
  std::string out;
  const auto& chunks = tpl.chunks();
  const auto& holders = tpl.placeholders();
  for (std::size_t i = 0; i < holders.size(); ++i) {
    out += chunks[i];
    out += resolved[holders[i].name].text;
  }
  out += chunks.back();
  return out;
}

}  // namespace rumorph
