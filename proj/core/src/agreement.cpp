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

#include "rumorph/agreement.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "rumorph/adjective.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/verb.hpp"

namespace rumorph {

namespace {

using std::u32string;

}  // namespace

Result<CyrillicWord> agree_adjective_noun(const CyrillicWord& adjective,
                                          const CyrillicWord& noun, Case c,
                                          Number n) {
  Result<NounTraits> traits = noun_traits(noun);
  if (!traits.ok()) return traits.error();
  Result<CyrillicWord> noun_form = inflect_noun(noun, c, n);
  if (!noun_form.ok()) return noun_form.error();
  GenderOrPlural g = n == Number::Plural ? GenderOrPlural::Plural
                                         : to_gender_or_plural(traits->gender);
  FeatureBundle b = adjective_long_slot(c, g);
  b.animacy = traits->animacy;
  Result<CyrillicWord> adj_form = inflect_adjective(adjective, b);
  if (!adj_form.ok()) return adj_form.error();
  return join_words({*adj_form, *noun_form});
}

Result<CyrillicWord> agree_verb_pronoun(const CyrillicWord& verb, Person p,
                                        Number n, std::optional<Gender> g,
                                        Tense t) {
  const char32_t* pronoun;
  if (n == Number::Plural) {
    pronoun = p == Person::First ? U"мы" : p == Person::Second ? U"вы" : U"они";
  } else if (p == Person::First) {
    pronoun = U"я";
  } else if (p == Person::Second) {
    pronoun = U"ты";
  } else {
    Gender pg = g.value_or(Gender::Masculine);
    pronoun = pg == Gender::Masculine  ? U"он"
              : pg == Gender::Feminine ? U"она"
                                       : U"оно";
  }

  FeatureBundle b;
  b.tense = t;
  if (t == Tense::Past) {
    if (n == Number::Plural) {
      b.number = Number::Plural;
    } else {
      if (!g)
        return make_error(errc::invalid_slot,
                          "past singular agreement needs a gender");
      b.gender = *g;
      b.number = Number::Singular;
    }
  } else {
    b.person = p;
    b.number = n;
  }
  Result<CyrillicWord> form = conjugate(verb, b);
  if (!form.ok()) return form.error();
  return join_words({CyrillicWord::from_normalized(pronoun), *form});
}

Result<CyrillicWord> quantity_phrase(int n, const CyrillicWord& noun,
                                     Case c) {
  if (n < 0 || n > 9999)
    return make_error(errc::range, "count out of 0..9999: " + std::to_string(n));
  Result<NounTraits> traits = noun_traits(noun);
  if (!traits.ok()) return traits.error();

  bool ends_in_one = n % 10 == 1 && n % 100 != 11;
  bool direct = c == Case::Nominative || c == Case::Accusative;

  Case noun_case;
  Number noun_number;
  if (direct) {
    bool paucal = n % 10 >= 2 && n % 10 <= 4 && (n % 100 < 12 || n % 100 > 14);
    if (ends_in_one) {
      noun_case = Case::Nominative;
      noun_number = Number::Singular;
    } else if (paucal) {
      noun_case = Case::Genitive;
      noun_number = Number::Singular;
    } else {
      noun_case = Case::Genitive;
      noun_number = Number::Plural;
    }
  } else {
    noun_case = c;
    noun_number = ends_in_one ? Number::Singular : Number::Plural;
  }

  Result<CyrillicWord> numeral =
      cardinal(n, c, traits->gender, Animacy::Inanimate);
  if (!numeral.ok()) return numeral.error();
  Result<CyrillicWord> counted = inflect_noun(noun, noun_case, noun_number);
  if (!counted.ok()) return counted.error();
  return join_words({*numeral, *counted});
}

// ---------------------------------------------------------------------------
// Formula verbalization

namespace {

enum class TokKind { Number, Plus, Minus, Times, Divide, Equals, Open, Close };

struct Token {
  TokKind kind;
  int value = 0;
};

Result<std::vector<Token>> tokenize(std::string_view expr) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) {
    return expr.substr(i).substr(0, s.size()) == s;
  };
  while (i < expr.size()) {
    char ch = expr[i];
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    if (ch >= '0' && ch <= '9') {
      long v = 0;
      std::size_t start = i;
      while (i < expr.size() && expr[i] >= '0' && expr[i] <= '9') {
        v = v * 10 + (expr[i] - '0');
        if (v > 9999)
          return make_error(errc::range,
                            "literal out of 0..9999 at offset " +
                                std::to_string(start));
        ++i;
      }
      out.push_back({TokKind::Number, static_cast<int>(v)});
      continue;
    }
    if (ch == '+') {
      out.push_back({TokKind::Plus});
      ++i;
    } else if (ch == '-') {
      out.push_back({TokKind::Minus});
      ++i;
    } else if (starts("−")) {  // minus sign
      out.push_back({TokKind::Minus});
      i += 2;
    } else if (ch == '*') {
      out.push_back({TokKind::Times});
      ++i;
    } else if (starts("×")) {  // multiplication sign
      out.push_back({TokKind::Times});
      i += 2;
    } else if (ch == '/') {
      out.push_back({TokKind::Divide});
      ++i;
    } else if (starts("÷")) {  // division sign
      out.push_back({TokKind::Divide});
      i += 2;
    } else if (ch == '=') {
      out.push_back({TokKind::Equals});
      ++i;
    } else if (ch == '(') {
      out.push_back({TokKind::Open});
      ++i;
    } else if (ch == ')') {
      out.push_back({TokKind::Close});
      ++i;
    } else {
      return make_error(errc::malformed_expression,
                        "unexpected character at offset " + std::to_string(i));
    }
  }
  if (out.empty())
    return make_error(errc::malformed_expression, "empty expression");
  return out;
}

// Grammar check only; verbalization later follows raw token order.
struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;

  bool at(TokKind k) const { return pos < toks.size() && toks[pos].kind == k; }

  bool factor() {
    if (at(TokKind::Number)) {
      ++pos;
      return true;
    }
    if (at(TokKind::Open)) {
      ++pos;
      if (!expr()) return false;
      if (!at(TokKind::Close)) return false;
      ++pos;
      return true;
    }
    return false;
  }

  bool term() {
    if (!factor()) return false;
    while (at(TokKind::Times) || at(TokKind::Divide)) {
      ++pos;
      if (!factor()) return false;
    }
    return true;
  }

  bool expr() {
    if (!term()) return false;
    while (at(TokKind::Plus) || at(TokKind::Minus)) {
      ++pos;
      if (!term()) return false;
    }
    return true;
  }

  bool formula() {
    if (!expr()) return false;
    if (at(TokKind::Equals)) {
      ++pos;
      if (!expr()) return false;
    }
    return pos == toks.size();
  }
};

}  // namespace

Result<CyrillicWord> formula_to_text(std::string_view expr) {
  Result<std::vector<Token>> toks = tokenize(expr);
  if (!toks.ok()) return toks.error();
  Parser parser{*toks};
  if (!parser.formula())
    return make_error(errc::malformed_expression,
                      "expression does not parse: " + std::string(expr));

  // A bare literal on the right of = takes the dative governed by равно.
  std::size_t eq = toks->size();
  for (std::size_t i = 0; i < toks->size(); ++i)
    if ((*toks)[i].kind == TokKind::Equals) eq = i;
  bool dative_rhs = eq + 2 == toks->size() &&
                    (*toks)[eq + 1].kind == TokKind::Number;

  std::vector<CyrillicWord> words;
  auto push = [&](const char32_t* w) {
    words.push_back(CyrillicWord::from_normalized(w));
  };
  for (std::size_t i = 0; i < toks->size(); ++i) {
    const Token& t = (*toks)[i];
    switch (t.kind) {
      case TokKind::Number: {
        Case c = dative_rhs && i == eq + 1 ? Case::Dative : Case::Nominative;
        Result<CyrillicWord> w =
            cardinal(t.value, c, Gender::Masculine, Animacy::Inanimate);
        if (!w.ok()) return w.error();
        words.push_back(std::move(*w));
        break;
      }
      case TokKind::Plus: push(U"плюс"); break;
      case TokKind::Minus: push(U"минус"); break;
      case TokKind::Times: push(U"умножить"); push(U"на"); break;
      case TokKind::Divide: push(U"разделить"); push(U"на"); break;
      case TokKind::Equals: push(U"равно"); break;
      case TokKind::Open: push(U"скобка"); push(U"открывается"); break;
      case TokKind::Close: push(U"скобка"); push(U"закрывается"); break;
    }
  }
  return join_words(words);
}

}  // namespace rumorph
