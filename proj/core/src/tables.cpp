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

#include "rumorph/tables.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "rumorph/cyrillic.hpp"

namespace rumorph {

namespace {

struct LineCursor {
  const std::string* file;
  std::size_t line = 0;
};

Error parse_error(const std::string& file, std::size_t line,
                  const std::string& what) {
  return make_error(errc::parse,
                    file + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Calls fn(line_text, line_number) for every non-empty, non-comment line.
template <class Fn>
Result<bool> for_lines(const std::string& name, std::string_view content,
                       Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    std::string line = strip(std::string(content.substr(start, end - start)));
    start = end + 1;
    if (line.empty() || line[0] == '#') {
      if (end == content.size()) break;
      continue;
    }
    Result<bool> r = fn(line, line_no);
    if (!r.ok()) return r;
    if (end == content.size()) break;
  }
  return true;
}

Result<std::u32string> decode_word(const std::string& name, std::size_t line,
                                   const std::string& text) {
  Result<CyrillicWord> w = CyrillicWord::parse(text);
  if (!w.ok())
    return parse_error(name, line, "bad lemma \"" + text + "\"");
  return std::u32string(w->chars());
}

Result<bool> parse_set(const std::string& name, std::string_view content,
                       Tables::Set* out) {
  return for_lines(name, content,
                   [&](const std::string& line, std::size_t n) -> Result<bool> {
                     Result<std::u32string> w = decode_word(name, n, line);
                     if (!w.ok()) return w.error();
                     out->insert(*w);
                     return true;
                   });
}

Result<bool> parse_pluralia(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string, std::optional<std::u32string>>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.empty() || cols.size() > 2)
          return parse_error(name, n, "expected lemma with optional gen-pl");
        Result<std::u32string> w = decode_word(name, n, strip(cols[0]));
        if (!w.ok()) return w.error();
        std::optional<std::u32string> gen;
        if (cols.size() == 2) {
          Result<std::u32string> g = decode_word(name, n, strip(cols[1]));
          if (!g.ok()) return g.error();
          gen = *g;
        }
        (*out)[*w] = gen;
        return true;
      });
}

Result<bool> parse_gender_overrides(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string, Gender>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
          return parse_error(name, n, "expected lemma<TAB>gender");
        Result<std::u32string> w = decode_word(name, n, strip(cols[0]));
        if (!w.ok()) return w.error();
        std::optional<Gender> g = gender_from(strip(cols[1]));
        if (!g) return parse_error(name, n, "unknown gender " + cols[1]);
        (*out)[*w] = *g;
        return true;
      });
}

Result<bool> parse_irregular_nouns(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string,
                       std::array<std::optional<std::u32string>, 12>>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
          return parse_error(name, n, "expected lemma<TAB>12 forms");
        Result<std::u32string> w = decode_word(name, n, strip(cols[0]));
        if (!w.ok()) return w.error();
        std::vector<std::string> forms = split(strip(cols[1]), ',');
        if (forms.size() != 12)
          return parse_error(name, n, "expected 12 forms, got " +
                                          std::to_string(forms.size()));
        std::array<std::optional<std::u32string>, 12> slots;
        for (std::size_t i = 0; i < 12; ++i) {
          std::string f = strip(forms[i]);
          if (f == "-") continue;
          Result<std::u32string> fw = decode_word(name, n, f);
          if (!fw.ok()) return fw.error();
          slots[i] = *fw;
        }
        (*out)[*w] = std::move(slots);
        return true;
      });
}

Result<bool> parse_word_map(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string, std::u32string>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
          return parse_error(name, n, "expected key<TAB>value");
        Result<std::u32string> k = decode_word(name, n, strip(cols[0]));
        if (!k.ok()) return k.error();
        Result<std::u32string> v = decode_word(name, n, strip(cols[1]));
        if (!v.ok()) return v.error();
        (*out)[*k] = *v;
        return true;
      });
}

Result<bool> parse_short_overrides(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string, std::array<std::u32string, 4>>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
          return parse_error(name, n, "expected lemma<TAB>4 forms");
        Result<std::u32string> w = decode_word(name, n, strip(cols[0]));
        if (!w.ok()) return w.error();
        std::vector<std::string> forms = split(strip(cols[1]), ',');
        if (forms.size() != 4)
          return parse_error(name, n, "expected 4 forms, got " +
                                          std::to_string(forms.size()));
        std::array<std::u32string, 4> slots;
        for (std::size_t i = 0; i < 4; ++i) {
          Result<std::u32string> fw = decode_word(name, n, strip(forms[i]));
          if (!fw.ok()) return fw.error();
          slots[i] = *fw;
        }
        (*out)[*w] = std::move(slots);
        return true;
      });
}

Result<bool> parse_series(const std::string& name, std::size_t line_no,
                          const std::string& value, std::size_t count,
                          std::optional<std::u32string>* out) {
  std::vector<std::string> forms = split(value, ',');
  if (forms.size() != count)
    return parse_error(name, line_no,
                       "expected " + std::to_string(count) + " forms, got " +
                           std::to_string(forms.size()));
  for (std::size_t i = 0; i < count; ++i) {
    std::string f = strip(forms[i]);
    if (f == "-") continue;
    Result<std::u32string> fw = decode_word(name, line_no, f);
    if (!fw.ok()) return fw.error();
    out[i] = *fw;
  }
  return true;
}

Result<bool> parse_irregular_verbs(
    const std::string& name, std::string_view content,
    std::unordered_map<std::u32string, IrregularVerb>* out) {
  return for_lines(
      name, content,
      [&](const std::string& line, std::size_t n) -> Result<bool> {
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() < 2)
          return parse_error(name, n, "expected lemma and at least one field");
        Result<std::u32string> w = decode_word(name, n, strip(cols[0]));
        if (!w.ok()) return w.error();
        IrregularVerb v;
        for (std::size_t i = 1; i < cols.size(); ++i) {
          std::string field = strip(cols[i]);
          if (field.empty()) continue;
          std::size_t eq = field.find('=');
          std::string key = eq == std::string::npos ? field
                                                    : field.substr(0, eq);
          std::string value =
              eq == std::string::npos ? "" : field.substr(eq + 1);
          Result<bool> r = true;
          if (key == "syn") {
            r = parse_series(name, n, value, 6, v.personal.data());
          } else if (key == "past") {
            r = parse_series(name, n, value, 4, v.past.data());
          } else if (key == "imp") {
            r = parse_series(name, n, value, 2, v.imperative.data());
          } else if (key == "asp") {
            std::optional<Aspect> a = aspect_from(value);
            if (!a) return parse_error(name, n, "unknown aspect " + value);
            v.aspect = a;
          } else if (key == "iger" || key == "pger" || key == "pra" ||
                     key == "pta" || key == "ppp") {
            Result<std::u32string> fw = decode_word(name, n, value);
            if (!fw.ok()) return fw.error();
            if (key == "iger") v.iger = *fw;
            if (key == "pger") v.pger = *fw;
            if (key == "pra") v.pres_act = *fw;
            if (key == "pta") v.past_act = *fw;
            if (key == "ppp") v.past_pass = *fw;
          } else if (key == "noimp") {
            v.no_imperative = true;
          } else if (key == "noiger") {
            v.no_iger = true;
          } else if (key == "nopger") {
            v.no_pger = true;
          } else if (key == "synfut") {
            v.synthetic_future = true;
          } else {
            return parse_error(name, n, "unknown field " + key);
          }
          if (!r.ok()) return r;
        }
        (*out)[*w] = std::move(v);
        return true;
      });
}

Tables*& active_ref() {
  static Tables* active = nullptr;
  return active;
}

}  // namespace

Result<Tables> Tables::from_sources(
    const std::map<std::string, std::string>& sources) {
  Tables t;
  for (const auto& [name, content] : sources) {
    Result<bool> r = true;
    if (name == "indeclinable.txt") {
      r = parse_set(name, content, &t.indeclinable);
    } else if (name == "animate.txt") {
      r = parse_set(name, content, &t.animate);
    } else if (name == "pluralia.txt") {
      r = parse_pluralia(name, content, &t.pluralia);
    } else if (name == "plural-a.txt") {
      r = parse_set(name, content, &t.plural_a);
    } else if (name == "fleeting-nouns.txt") {
      r = parse_set(name, content, &t.fleeting);
    } else if (name == "non-fleeting.txt") {
      r = parse_set(name, content, &t.nonfleeting);
    } else if (name == "sibilant-stressed.txt") {
      r = parse_set(name, content, &t.sibilant_stressed);
    } else if (name == "adjectival-nouns.txt") {
      r = parse_set(name, content, &t.adjectival_nouns);
    } else if (name == "gender-overrides.tsv") {
      r = parse_gender_overrides(name, content, &t.gender_overrides);
    } else if (name == "irregular-nouns.tsv") {
      r = parse_irregular_nouns(name, content, &t.irregular_nouns);
    } else if (name == "indeclinable-adjectives.txt") {
      r = parse_set(name, content, &t.indeclinable_adjectives);
    } else if (name == "short-form-skip.txt") {
      r = parse_set(name, content, &t.short_form_skip);
    } else if (name == "possessive-adjectives.txt") {
      r = parse_set(name, content, &t.possessive_soft);
    } else if (name == "short-overrides.tsv") {
      r = parse_short_overrides(name, content, &t.short_overrides);
    } else if (name == "suppletive-adverbs.tsv") {
      r = parse_word_map(name, content, &t.suppletive_adverbs);
    } else if (name == "irregular-verbs.tsv") {
      r = parse_irregular_verbs(name, content, &t.irregular_verbs);
    } else if (name == "no-gerund.txt") {
      r = parse_set(name, content, &t.no_gerund);
    } else if (name == "biaspectual.txt") {
      r = parse_set(name, content, &t.biaspectual);
    } else if (name == "no-imperative.txt") {
      r = parse_set(name, content, &t.no_imperative);
    } else if (name == "second-conjugation.txt") {
      r = parse_set(name, content, &t.second_conj);
    } else if (name == "perfective-simple.txt") {
      r = parse_set(name, content, &t.perfective_simple);
    } else if (name == "imperfective-prefixed.txt") {
      r = parse_set(name, content, &t.imperfective_prefixed);
    } else if (name == "imperative-soft.txt") {
      r = parse_set(name, content, &t.imperative_soft);
    } else if (name == "nu-imperfective.txt") {
      r = parse_set(name, content, &t.nu_imperfective);
    } else if (name == "nu-drop-past.txt") {
      r = parse_set(name, content, &t.nu_drop_past);
    } else if (name == "motion-iterative.txt") {
      r = parse_set(name, content, &t.motion_iterative);
    } else if (name == "t-shch-verbs.txt") {
      r = parse_set(name, content, &t.t_shch);
    } else if (name == "mutating-verbs.tsv") {
      r = parse_word_map(name, content, &t.mutating_stems);
    } else if (name == "velar-verbs.tsv") {
      r = parse_word_map(name, content, &t.velar_stems);
    } else if (name == "ti-verbs.tsv") {
      r = parse_word_map(name, content, &t.ti_stems);
    }
    // Unrecognized names are ignored so a data directory can hold notes.
    if (!r.ok()) return r.error();
  }
  return t;
}

const Tables& Tables::builtin() {
  static const Tables* kTables = [] {
    std::map<std::string, std::string> sources;
    for (const auto& [name, content] : detail::builtin_data())
      sources.emplace(name, std::string(content));
    Result<Tables> t = Tables::from_sources(sources);
    if (!t.ok()) {
      // Builtin data is validated by the test suite; a parse failure here
      // is a build defect, not a runtime condition.
      std::fprintf(stderr, "builtin tables: %s\n", t.error().message.c_str());
      std::abort();
    }
    return new Tables(std::move(*t));
  }();
  return *kTables;
}

const Tables& active_tables() {
  Tables* p = active_ref();
  return p ? *p : Tables::builtin();
}

Result<std::size_t> load_exception_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    return make_error(errc::io, "not a directory: " + dir);
  std::map<std::string, std::string> sources;
  for (const auto& [name, content] : detail::builtin_data())
    sources.emplace(name, std::string(content));
  std::size_t loaded = 0;
  for (const auto& [name, unused] : detail::builtin_data()) {
    fs::path p = fs::path(dir) / name;
    if (!fs::exists(p, ec)) continue;
    std::ifstream in(p, std::ios::binary);
    if (!in) return make_error(errc::io, "cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    sources[name] = buf.str();
    ++loaded;
  }
  Result<Tables> t = Tables::from_sources(sources);
  if (!t.ok()) return t.error();
  delete active_ref();
  active_ref() = new Tables(std::move(*t));
  return loaded;
}

void reset_tables() {
  delete active_ref();
  active_ref() = nullptr;
}

}  // namespace rumorph
