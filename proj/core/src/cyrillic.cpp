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

#include "rumorph/cyrillic.hpp"

namespace rumorph {

namespace {

constexpr char32_t kCapitalA = U'А';   // U+0410
constexpr char32_t kCapitalYa = U'Я';  // U+042F
constexpr char32_t kSmallA = U'а';     // U+0430
constexpr char32_t kSmallYa = U'я';    // U+044F
constexpr char32_t kYo = U'ё';         // U+0451
constexpr char32_t kCapitalYo = U'Ё';  // U+0401

bool is_combining_accent(char32_t c) {
  return c == 0x0300 || c == 0x0301;  // grave/acute stress marks
}

}  // namespace

std::u32string utf8_decode(std::string_view utf8, bool* ok) {
  std::u32string out;
  out.reserve(utf8.size());
  bool valid = true;
  std::size_t i = 0;
  while (i < utf8.size()) {
    unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      valid = false;
      ++i;
      continue;
    }
    if (i + len > utf8.size()) {
      valid = false;
      break;
    }
    bool cont_ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(utf8[i + k]);
      if ((bk & 0xC0) != 0x80) {
        cont_ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!cont_ok) {
      valid = false;
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  if (ok) *ok = valid;
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_cyrillic_letter(char32_t ch) {
  return (ch >= kSmallA && ch <= kSmallYa) || ch == kYo || (ch >= kCapitalA && ch <= kCapitalYa) ||
         ch == kCapitalYo;
}

bool is_vowel(char32_t ch) {
  switch (ch) {
    case U'а': case U'е': case U'и': case U'о': case U'у':
    case U'ы': case U'э': case U'ю': case U'я':
      return true;
    default:
      return false;
  }
}

bool is_consonant(char32_t ch) {
  if (ch < kSmallA || ch > kSmallYa) return false;
  return !is_vowel(ch) && ch != U'ь' && ch != U'ъ';
}

bool is_sibilant(char32_t ch) { return ch == U'ж' || ch == U'ш' || ch == U'ч' || ch == U'щ'; }

bool is_velar(char32_t ch) { return ch == U'г' || ch == U'к' || ch == U'х'; }

Result<CyrillicWord> CyrillicWord::parse(std::string_view raw_utf8) {
  bool valid = true;
  std::u32string decoded = utf8_decode(raw_utf8, &valid);
  if (!valid) return make_error(errc::not_russian, "invalid UTF-8 input");

  std::size_t begin = 0, end = decoded.size();
  auto is_space = [](char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' || c == 0xFEFF;
  };
  while (begin < end && is_space(decoded[begin])) ++begin;
  while (end > begin && is_space(decoded[end - 1])) --end;
  if (begin == end) return make_error(errc::not_russian, "empty input");

  std::u32string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char32_t c = decoded[i];
    if (is_combining_accent(c)) continue;
    if (c >= kCapitalA && c <= kCapitalYa) c = c + 0x20;
    if (c == kCapitalYo) c = kYo;
    if (c == kYo) c = U'е';
    if (c == U'-') {
      out.push_back(c);
      continue;
    }
    if (c < kSmallA || c > kSmallYa)
      return make_error(errc::not_russian,
                        "not a Russian word: " + std::string(raw_utf8));
    out.push_back(c);
  }
  if (out.empty() || out.front() == U'-' || out.back() == U'-')
    return make_error(errc::not_russian, "not a Russian word: " + std::string(raw_utf8));
  return CyrillicWord(std::move(out));
}

CyrillicWord CyrillicWord::from_normalized(std::u32string text) {
  return CyrillicWord(std::move(text));
}

bool CyrillicWord::ends_with(std::u32string_view suffix) const {
  return text_.size() >= suffix.size() &&
         std::u32string_view(text_).substr(text_.size() - suffix.size()) == suffix;
}

bool CyrillicWord::starts_with(std::u32string_view prefix) const {
  return text_.size() >= prefix.size() && std::u32string_view(text_).substr(0, prefix.size()) == prefix;
}

Result<std::u32string> till(std::u32string_view text, std::size_t n) {
  if (n > text.size())
    return make_error(errc::underflow, "till: removing more characters than the word has");
  return std::u32string(text.substr(0, text.size() - n));
}

Result<std::u32string> till(const CyrillicWord& word, std::size_t n) {
  return till(std::u32string_view(word.chars()), n);
}

CyrillicWord join_words(const std::vector<CyrillicWord>& words) {
  std::u32string joined;
  for (const CyrillicWord& w : words) {
    if (!joined.empty()) joined.push_back(U' ');
    joined += w.chars();
  }
  return CyrillicWord::from_normalized(std::move(joined));
}

}  // namespace rumorph
