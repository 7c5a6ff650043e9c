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

#ifndef RUMORPH_CYRILLIC_HPP_
#define RUMORPH_CYRILLIC_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rumorph/result.hpp"

namespace rumorph {

// UTF-8 <-> UTF-32 helpers. All rule code operates on code points, never on
// bytes; these are the only two places where encoding is touched.
std::u32string utf8_decode(std::string_view utf8, bool* ok = nullptr);
std::string utf8_encode(std::u32string_view text);

bool is_vowel(char32_t ch);
bool is_consonant(char32_t ch);  // Cyrillic letter that is neither vowel nor ь/ъ
bool is_sibilant(char32_t ch);   // ж ш ч щ
bool is_velar(char32_t ch);      // г к х
bool is_cyrillic_letter(char32_t ch);

/// A normalized lowercase Cyrillic surface string: letters а..я plus hyphen,
/// never containing ё. Multi-word forms produced by the engine (analytic
/// future, numeral phrases) may additionally contain single spaces; parsing
/// user input never admits them.
class CyrillicWord {
 public:
  CyrillicWord() = default;

  /// Normalizes raw UTF-8 input: trims, lowercases, maps ё->е, strips
  /// combining stress marks, and validates the alphabet.
  static Result<CyrillicWord> parse(std::string_view raw_utf8);

  /// Wraps engine-composed text without re-validation. The caller guarantees
  /// the content is already normalized.
  static CyrillicWord from_normalized(std::u32string text);

  const std::u32string& chars() const { return text_; }
  std::string str() const { return utf8_encode(text_); }

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  char32_t back() const { return text_.back(); }

  bool ends_with(std::u32string_view suffix) const;
  bool starts_with(std::u32string_view prefix) const;

  auto operator<=>(const CyrillicWord&) const = default;

 private:
  explicit CyrillicWord(std::u32string text) : text_(std::move(text)) {}
  std::u32string text_;
};

/// Removes the last n code points; till(w, 0) is the identity and full
/// truncation yields the empty string.
Result<std::u32string> till(const CyrillicWord& word, std::size_t n);
Result<std::u32string> till(std::u32string_view text, std::size_t n);

/// parse() under its spec name.
inline Result<CyrillicWord> normalize(std::string_view raw_utf8) {
  return CyrillicWord::parse(raw_utf8);
}

/// Joins words with single spaces into one multi-word form.
CyrillicWord join_words(const std::vector<CyrillicWord>& words);

}  // namespace rumorph

#endif  // RUMORPH_CYRILLIC_HPP_
