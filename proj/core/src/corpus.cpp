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

#include "rumorph/corpus.hpp"

#include <zlib.h>

#include <algorithm>
#include <map>

namespace rumorph {

namespace {

// ---------------------------------------------------------------------------
// Grammeme mapping

enum class TagKind { Pos, Feature, Ignore };

const std::map<std::string_view, CorpusPos>& pos_tags() {
  static const std::map<std::string_view, CorpusPos> kMap = {
      {"NOUN", CorpusPos::Noun},
      {"VERB", CorpusPos::Verb},
      {"INFN", CorpusPos::Infinitive},
      {"ADJF", CorpusPos::AdjectiveFull},
      {"ADJS", CorpusPos::AdjectiveShort},
      {"PRTF", CorpusPos::ParticipleFull},
      {"PRTS", CorpusPos::ParticipleShort},
      {"GRND", CorpusPos::Gerund},
      {"NUMR", CorpusPos::Numeral},
      {"ADVB", CorpusPos::Adverb},
      {"COMP", CorpusPos::Comparative},
  };
  return kMap;
}

// Lexeme-classifying grammemes that never change which surface string a
// slot carries; they are dropped rather than treated as opaque.
bool ignorable_tag(std::string_view g) {
  static const std::map<std::string_view, int> kSet = {
      {"Qual", 0}, {"Anum", 0}, {"Poss", 0}, {"Subx", 0}, {"Sgtm", 0},
      {"Pltm", 0}, {"Fixd", 0}, {"GNdr", 0}, {"tran", 0}, {"intr", 0},
      {"Impe", 0}, {"Impx", 0}, {"Refl", 0}, {"Mult", 0}, {"indc", 0},
      {"excl", 0},
  };
  return kSet.count(g) > 0;
}

// Returns true if the grammeme mapped onto the bundle (or the imperative
// marker); false leaves it for the opaque-flag list.
bool apply_feature(std::string_view g, FeatureBundle* b, bool* imperative) {
  if (g == "nomn") { b->case_ = Case::Nominative; return true; }
  if (g == "gent") { b->case_ = Case::Genitive; return true; }
  if (g == "datv") { b->case_ = Case::Dative; return true; }
  if (g == "accs") { b->case_ = Case::Accusative; return true; }
  if (g == "ablt") { b->case_ = Case::Instrumental; return true; }
  if (g == "loct") { b->case_ = Case::Prepositional; return true; }
  if (g == "sing") { b->number = Number::Singular; return true; }
  if (g == "plur") { b->number = Number::Plural; return true; }
  if (g == "masc") { b->gender = Gender::Masculine; return true; }
  if (g == "femn") { b->gender = Gender::Feminine; return true; }
  if (g == "neut") { b->gender = Gender::Neuter; return true; }
  if (g == "anim") { b->animacy = Animacy::Animate; return true; }
  if (g == "inan") { b->animacy = Animacy::Inanimate; return true; }
  if (g == "perf") { b->aspect = Aspect::Perfective; return true; }
  if (g == "impf") { b->aspect = Aspect::Imperfective; return true; }
  if (g == "1per") { b->person = Person::First; return true; }
  if (g == "2per") { b->person = Person::Second; return true; }
  if (g == "3per") { b->person = Person::Third; return true; }
  if (g == "pres") { b->tense = Tense::Present; return true; }
  if (g == "past") { b->tense = Tense::Past; return true; }
  if (g == "futr") { b->tense = Tense::Future; return true; }
  if (g == "actv") { b->voice = Voice::Active; return true; }
  if (g == "pssv") { b->voice = Voice::Passive; return true; }
  if (g == "impr") { *imperative = true; return true; }
  return false;
}

const char* feature_tag(Case c) {
  switch (c) {
    case Case::Nominative: return "nomn";
    case Case::Genitive: return "gent";
    case Case::Dative: return "datv";
    case Case::Accusative: return "accs";
    case Case::Instrumental: return "ablt";
    case Case::Prepositional: return "loct";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Minimal XML tag scanner (the dictionary export uses no text nodes, CDATA,
// or namespaces; offsets feed parse errors).

struct XmlTag {
  std::string_view name;
  std::vector<std::pair<std::string_view, std::string>> attrs;
  bool closing = false;
  bool self_closing = false;
  std::size_t offset = 0;
};

Error xml_error(std::size_t offset) {
  return make_error(errc::parse,
                    "malformed XML at byte " + std::to_string(offset));
}

std::string decode_entities(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    if (raw[i] != '&') {
      out += raw[i++];
      continue;
    }
    std::string_view rest = raw.substr(i);
    auto take = [&](std::string_view ent, char ch) {
      if (rest.substr(0, ent.size()) != ent) return false;
      out += ch;
      i += ent.size();
      return true;
    };
    if (take("&lt;", '<') || take("&gt;", '>') || take("&amp;", '&') ||
        take("&quot;", '"') || take("&apos;", '\''))
      continue;
    out += raw[i++];
  }
  return out;
}

class XmlScanner {
 public:
  explicit XmlScanner(std::string_view data) : data_(data) {}

  // Next tag, std::nullopt at end of input.
  Result<std::optional<XmlTag>> next() {
    while (true) {
      std::size_t open = data_.find('<', pos_);
      if (open == std::string_view::npos) return std::optional<XmlTag>();
      pos_ = open + 1;
      if (pos_ >= data_.size()) return xml_error(open);
      char c = data_[pos_];
      if (c == '?' || c == '!') {  // declaration, comment, doctype
        std::size_t close = data_.find('>', pos_);
        if (close == std::string_view::npos) return xml_error(open);
        pos_ = close + 1;
        continue;
      }
      XmlTag tag;
      tag.offset = open;
      if (c == '/') {
        tag.closing = true;
        ++pos_;
      }
      std::size_t name_start = pos_;
      while (pos_ < data_.size() && is_name_char(data_[pos_])) ++pos_;
      if (pos_ == name_start) return xml_error(open);
      tag.name = data_.substr(name_start, pos_ - name_start);
      while (true) {
        skip_space();
        if (pos_ >= data_.size()) return xml_error(open);
        if (data_[pos_] == '>') {
          ++pos_;
          return std::optional<XmlTag>(std::move(tag));
        }
        if (data_[pos_] == '/') {
          if (pos_ + 1 >= data_.size() || data_[pos_ + 1] != '>')
            return xml_error(open);
          tag.self_closing = true;
          pos_ += 2;
          return std::optional<XmlTag>(std::move(tag));
        }
        std::size_t key_start = pos_;
        while (pos_ < data_.size() && is_name_char(data_[pos_])) ++pos_;
        if (pos_ == key_start || pos_ >= data_.size() || data_[pos_] != '=')
          return xml_error(open);
        std::string_view key = data_.substr(key_start, pos_ - key_start);
        ++pos_;
        if (pos_ >= data_.size() || data_[pos_] != '"') return xml_error(open);
        ++pos_;
        std::size_t val_start = pos_;
        std::size_t val_end = data_.find('"', pos_);
        if (val_end == std::string_view::npos) return xml_error(open);
        tag.attrs.emplace_back(
            key, decode_entities(data_.substr(val_start, val_end - val_start)));
        pos_ = val_end + 1;
      }
    }
  }

 private:
  static bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':';
  }
  void skip_space() {
    while (pos_ < data_.size() &&
           (data_[pos_] == ' ' || data_[pos_] == '\t' || data_[pos_] == '\n' ||
            data_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

const std::string* attr(const XmlTag& tag, std::string_view key) {
  for (const auto& [k, v] : tag.attrs)
    if (k == key) return &v;
  return nullptr;
}

Result<int> int_attr(const XmlTag& tag, std::string_view key) {
  const std::string* v = attr(tag, key);
  if (!v) return xml_error(tag.offset);
  int out = 0;
  for (char c : *v) {
    if (c < '0' || c > '9') return xml_error(tag.offset);
    out = out * 10 + (c - '0');
    if (out < 0) return xml_error(tag.offset);
  }
  return out;
}

}  // namespace

std::string_view name_of(CorpusPos p) {
  switch (p) {
    case CorpusPos::Noun: return "NOUN";
    case CorpusPos::Verb: return "VERB";
    case CorpusPos::Infinitive: return "INFN";
    case CorpusPos::AdjectiveFull: return "ADJF";
    case CorpusPos::AdjectiveShort: return "ADJS";
    case CorpusPos::ParticipleFull: return "PRTF";
    case CorpusPos::ParticipleShort: return "PRTS";
    case CorpusPos::Gerund: return "GRND";
    case CorpusPos::Numeral: return "NUMR";
    case CorpusPos::Adverb: return "ADVB";
    case CorpusPos::Comparative: return "COMP";
  }
  return "";
}

const CorpusLexeme* Lexicon::by_id(int id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &lexemes[it->second];
}

std::vector<const CorpusLexeme*> Lexicon::of_pos(CorpusPos p) const {
  std::vector<const CorpusLexeme*> out;
  for (const CorpusLexeme& l : lexemes)
    if (l.pos == p) out.push_back(&l);
  return out;
}

std::vector<const CorpusLexeme*> Lexicon::linked_from(int id) const {
  std::vector<const CorpusLexeme*> out;
  for (const CorpusLink& link : links)
    if (link.from == id)
      if (const CorpusLexeme* l = by_id(link.to)) out.push_back(l);
  return out;
}

void Lexicon::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < lexemes.size(); ++i)
    index_.emplace(lexemes[i].id, i);
}

Result<Lexicon> ingest_opencorpora(std::string_view xml) {
  Lexicon lex;
  XmlScanner scanner(xml);

  struct PendingLexeme {
    int id = 0;
    std::optional<CorpusPos> pos;
    std::optional<CyrillicWord> lemma;
    FeatureBundle lemma_bundle;
    bool lemma_imperative = false;  // never set in practice
    std::vector<std::string> lemma_flags;
    std::vector<CorpusForm> forms;
    std::size_t dropped_forms = 0;
  };
  std::optional<PendingLexeme> cur;
  // Grammeme target inside a lexeme: the <l> element or the open <f>.
  enum class Target { None, Lemma, Form };
  Target target = Target::None;
  std::optional<CorpusForm> form;
  bool form_ok = false;

  auto close_form = [&] {
    if (target != Target::Form || !cur) return;
    if (form_ok && form) {
      std::sort(form->flags.begin(), form->flags.end());
      form->comparable = form->flags.empty();
      cur->forms.push_back(std::move(*form));
    } else {
      ++cur->dropped_forms;
    }
    form.reset();
    target = Target::None;
  };

  auto close_lexeme = [&] {
    if (!cur) return;
    close_form();
    lex.skipped_forms += cur->dropped_forms;
    if (!cur->pos || !cur->lemma) {
      ++lex.skipped_lexemes;
    } else {
      CorpusLexeme out;
      out.id = cur->id;
      out.lemma = std::move(*cur->lemma);
      out.pos = *cur->pos;
      out.lemma_bundle = cur->lemma_bundle;
      std::sort(cur->lemma_flags.begin(), cur->lemma_flags.end());
      out.lemma_flags = std::move(cur->lemma_flags);
      out.comparable = out.lemma_flags.empty();
      out.forms = std::move(cur->forms);
      if (!out.comparable)
        for (CorpusForm& f : out.forms) f.comparable = false;
      lex.lexemes.push_back(std::move(out));
    }
    cur.reset();
    target = Target::None;
  };

  while (true) {
    Result<std::optional<XmlTag>> step = scanner.next();
    if (!step.ok()) return step.error();
    if (!step->has_value()) break;
    const XmlTag& tag = **step;

    if (tag.name == "lemma") {
      if (tag.closing) {
        close_lexeme();
        continue;
      }
      close_lexeme();
      Result<int> id = int_attr(tag, "id");
      if (!id.ok()) return id.error();
      cur.emplace();
      cur->id = *id;
      continue;
    }
    if (tag.name == "l" || tag.name == "f") {
      bool is_lemma = tag.name == "l";
      if (tag.closing) {
        if (is_lemma)
          target = Target::None;
        else
          close_form();
        continue;
      }
      if (!cur) return xml_error(tag.offset);
      close_form();
      const std::string* text = attr(tag, "t");
      if (!text) return xml_error(tag.offset);
      Result<CyrillicWord> word = CyrillicWord::parse(*text);
      if (is_lemma) {
        target = Target::Lemma;
        if (word.ok()) cur->lemma = std::move(*word);
      } else {
        target = Target::Form;
        form.emplace();
        form_ok = word.ok();
        if (word.ok()) form->form = std::move(*word);
      }
      if (tag.self_closing) {
        if (is_lemma)
          target = Target::None;
        else
          close_form();
      }
      continue;
    }
    if (tag.name == "g") {
      if (tag.closing) continue;
      if (!cur || target == Target::None) return xml_error(tag.offset);
      const std::string* v = attr(tag, "v");
      if (!v) return xml_error(tag.offset);
      if (target == Target::Lemma) {
        auto pos_it = pos_tags().find(*v);
        if (pos_it != pos_tags().end()) {
          cur->pos = pos_it->second;
        } else if (!ignorable_tag(*v) &&
                   !apply_feature(*v, &cur->lemma_bundle,
                                  &cur->lemma_imperative)) {
          cur->lemma_flags.push_back(*v);
        }
      } else if (form) {
        if (!ignorable_tag(*v) &&
            !apply_feature(*v, &form->bundle, &form->imperative))
          form->flags.push_back(*v);
      }
      continue;
    }
    if (tag.name == "link") {
      if (tag.closing) continue;
      close_lexeme();
      CorpusLink link;
      Result<int> id = int_attr(tag, "id");
      Result<int> from = int_attr(tag, "from");
      Result<int> to = int_attr(tag, "to");
      Result<int> type = int_attr(tag, "type");
      if (!id.ok()) return id.error();
      if (!from.ok()) return from.error();
      if (!to.ok()) return to.error();
      if (!type.ok()) return type.error();
      link.id = *id;
      link.from = *from;
      link.to = *to;
      link.type = *type;
      lex.links.push_back(link);
      continue;
    }
    // dictionary, lemmata, grammemes, links wrappers: ignored.
  }
  close_lexeme();
  lex.rebuild_index();
  return lex;
}

Result<Lexicon> ingest_opencorpora_file(const std::string& path) {
  // gzread transparently handles both gzip and plain files.
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) return make_error(errc::io, "cannot open " + path);
  std::string data;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof buf)) > 0) data.append(buf, n);
  bool bad = n < 0;
  gzclose(f);
  if (bad) return make_error(errc::io, "cannot read " + path);
  return ingest_opencorpora(data);
}

namespace {

std::string encode_entities(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_bundle(const FeatureBundle& b, bool imperative,
                  const std::vector<std::string>& flags, std::string* out) {
  auto g = [out](std::string_view v) {
    *out += "<g v=\"";
    *out += v;
    *out += "\"/>";
  };
  if (b.aspect) g(*b.aspect == Aspect::Perfective ? "perf" : "impf");
  if (b.animacy) g(*b.animacy == Animacy::Animate ? "anim" : "inan");
  if (b.gender)
    g(*b.gender == Gender::Masculine  ? "masc"
      : *b.gender == Gender::Feminine ? "femn"
                                      : "neut");
  if (b.number) g(*b.number == Number::Singular ? "sing" : "plur");
  if (b.case_) g(feature_tag(*b.case_));
  if (b.tense)
    g(*b.tense == Tense::Present ? "pres"
      : *b.tense == Tense::Past  ? "past"
                                 : "futr");
  if (b.person)
    g(*b.person == Person::First  ? "1per"
      : *b.person == Person::Second ? "2per"
                                    : "3per");
  if (b.voice) g(*b.voice == Voice::Active ? "actv" : "pssv");
  if (imperative) g("impr");
  for (const std::string& f : flags) g(f);
}

}  // namespace

std::string write_opencorpora(const Lexicon& lexicon) {
  std::string out;
  out +=
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<dictionary version=\"0.92\" revision=\"1\">\n<lemmata>\n";
  for (const CorpusLexeme& l : lexicon.lexemes) {
    out += "<lemma id=\"" + std::to_string(l.id) + "\" rev=\"1\">";
    out += "<l t=\"" + encode_entities(l.lemma.str()) + "\">";
    out += "<g v=\"";
    out += name_of(l.pos);
    out += "\"/>";
    write_bundle(l.lemma_bundle, false, l.lemma_flags, &out);
    out += "</l>";
    for (const CorpusForm& f : l.forms) {
      out += "<f t=\"" + encode_entities(f.form.str()) + "\">";
      write_bundle(f.bundle, f.imperative, f.flags, &out);
      out += "</f>";
    }
    out += "</lemma>\n";
  }
  out += "</lemmata>\n<links>\n";
  for (const CorpusLink& link : lexicon.links) {
    out += "<link id=\"" + std::to_string(link.id) + "\" from=\"" +
           std::to_string(link.from) + "\" to=\"" + std::to_string(link.to) +
           "\" type=\"" + std::to_string(link.type) + "\"/>\n";
  }
  out += "</links>\n</dictionary>\n";
  return out;
}

}  // namespace rumorph
