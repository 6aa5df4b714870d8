// Copyright 2026 The Lipogram Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokenization, forbidden-letter sets and letter statistics.
//
// Words are maximal runs of ASCII letters joined by internal apostrophes
// (ASCII ' or U+2019). Everything else is either whitespace or punctuation;
// non-ASCII code points are always punctuation, one token per code point.

#ifndef LIPOGRAM_TEXT_HPP_
#define LIPOGRAM_TEXT_HPP_

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lipogram/error.hpp"

namespace lipogram {

inline constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";

inline bool is_ascii_letter(char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
}

inline bool is_ascii_upper(char ch) { return ch >= 'A' && ch <= 'Z'; }

inline char to_lower_ascii(char ch) {
  return is_ascii_upper(ch) ? static_cast<char>(ch - 'A' + 'a') : ch;
}

inline char to_upper_ascii(char ch) {
  return (ch >= 'a' && ch <= 'z') ? static_cast<char>(ch - 'a' + 'A') : ch;
}

inline bool is_space_byte(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' ||
         ch == '\v';
}

// Length in bytes of the UTF-8 sequence starting at `text[pos]`. Invalid or
// truncated sequences count as a single byte so tokenization stays total.
inline std::size_t utf8_sequence_length(std::string_view text,
                                        std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
  } else if (lead >= 0xE0) {
    len = 3;
  } else if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  }
  if (len == 1 || pos + len > text.size()) return 1;
  for (std::size_t i = 1; i < len; ++i) {
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) return 1;
  }
  return len;
}

// Returns the byte length of an apostrophe at `pos` (1 for ASCII, 3 for
// U+2019) or 0 if there is none.
inline std::size_t apostrophe_length(std::string_view text, std::size_t pos) {
  if (text[pos] == '\'') return 1;
  if (text.substr(pos, kRightSingleQuote.size()) == kRightSingleQuote) {
    return kRightSingleQuote.size();
  }
  return 0;
}

// The set of forbidden letters. Membership is case-insensitive; characters
// outside a-z are never members.
class ConstraintSet {
 public:
  ConstraintSet() = default;

  // Parses a letter string such as "e" or "AEIOU". Duplicates are merged.
  // Throws InputError on any character that is not an ASCII letter.
  static ConstraintSet parse(std::string_view letters) {
    ConstraintSet set;
    for (char ch : letters) {
      if (!is_ascii_letter(ch)) {
        throw InputError("constraint letters must be a-z, got '" +
                         std::string(1, ch) + "'");
      }
      set.insert(ch);
    }
    return set;
  }

  static ConstraintSet single(char letter) {
    ConstraintSet set;
    set.insert(letter);
    return set;
  }

  void insert(char letter) {
    if (is_ascii_letter(letter)) bits_.set(to_lower_ascii(letter) - 'a');
  }

  bool contains(char ch) const {
    return is_ascii_letter(ch) && bits_.test(to_lower_ascii(ch) - 'a');
  }

  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }

  bool is_subset_of(const ConstraintSet& other) const {
    return (bits_ & ~other.bits_).none();
  }

  // Sorted lowercase letters, "" for the empty set.
  std::string letters() const {
    std::string out;
    for (int i = 0; i < 26; ++i) {
      if (bits_.test(i)) out.push_back(static_cast<char>('a' + i));
    }
    return out;
  }

  // Display label: upper-case letters, or "none" for the empty set.
  std::string label() const {
    if (empty()) return "none";
    std::string out = letters();
    for (char& ch : out) ch = to_upper_ascii(ch);
    return out;
  }

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

 private:
  std::bitset<26> bits_;
};

enum class TokenKind { kWord, kPunct, kSpace };

struct Token {
  TokenKind kind;
  std::string text;

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenSeq = std::vector<Token>;

inline TokenSeq tokenize(std::string_view text) {
  TokenSeq tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (is_ascii_letter(ch)) {
      std::size_t end = pos;
      while (end < text.size()) {
        if (is_ascii_letter(text[end])) {
          ++end;
          continue;
        }
        const std::size_t apos = apostrophe_length(text, end);
        if (apos > 0 && end + apos < text.size() &&
            is_ascii_letter(text[end + apos])) {
          end += apos;
          continue;
        }
        break;
      }
      tokens.push_back({TokenKind::kWord, std::string(text.substr(pos, end - pos))});
      pos = end;
    } else if (is_space_byte(ch)) {
      std::size_t end = pos;
      while (end < text.size() && is_space_byte(text[end])) ++end;
      tokens.push_back({TokenKind::kSpace, std::string(text.substr(pos, end - pos))});
      pos = end;
    } else {
      const std::size_t len = utf8_sequence_length(text, pos);
      tokens.push_back({TokenKind::kPunct, std::string(text.substr(pos, len))});
      pos += len;
    }
  }
  return tokens;
}

inline std::string detokenize(const TokenSeq& tokens) {
  std::string out;
  for (const auto& token : tokens) out += token.text;
  return out;
}

// Surface text of every word token, in order.
inline std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> words;
  for (auto& token : tokenize(text)) {
    if (token.kind == TokenKind::kWord) words.push_back(std::move(token.text));
  }
  return words;
}

// Lower-cased word with U+2019 folded to an ASCII apostrophe. Used as the
// canonical key for language-model statistics, lexicon lookups, embedding
// features and dictionary checks.
inline std::string normalize_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size();) {
    if (word.substr(i, kRightSingleQuote.size()) == kRightSingleQuote) {
      out.push_back('\'');
      i += kRightSingleQuote.size();
    } else {
      out.push_back(to_lower_ascii(word[i]));
      ++i;
    }
  }
  return out;
}

inline std::vector<std::string> normalized_words(std::string_view text) {
  std::vector<std::string> words;
  for (const auto& token : tokenize(text)) {
    if (token.kind == TokenKind::kWord) words.push_back(normalize_word(token.text));
  }
  return words;
}

inline bool violates(std::string_view word, const ConstraintSet& constraint) {
  for (char ch : word) {
    if (constraint.contains(ch)) return true;
  }
  return false;
}

inline std::string strip_letters(std::string_view word,
                                 const ConstraintSet& constraint) {
  std::string out;
  out.reserve(word.size());
  for (char ch : word) {
    if (!constraint.contains(ch)) out.push_back(ch);
  }
  return out;
}

struct FreqTable {
  std::array<std::uint64_t, 26> counts{};
  std::uint64_t total = 0;

  double frequency(char letter) const {
    if (!is_ascii_letter(letter) || total == 0) return 0.0;
    return static_cast<double>(counts[to_lower_ascii(letter) - 'a']) /
           static_cast<double>(total);
  }
};

// Counts ASCII letters case-insensitively. Throws InputError when the text
// holds no letter at all.
inline FreqTable letter_frequencies(std::string_view corpus) {
  FreqTable table;
  for (char ch : corpus) {
    if (is_ascii_letter(ch)) {
      ++table.counts[to_lower_ascii(ch) - 'a'];
      ++table.total;
    }
  }
  if (table.total == 0) {
    throw InputError("letter frequencies need at least one Latin letter");
  }
  return table;
}

inline double exclusion_fraction(const ConstraintSet& constraint,
                                 const FreqTable& freq) {
  double sum = 0.0;
  for (char ch : constraint.letters()) sum += freq.frequency(ch);
  return sum;
}

// Splits on blank lines. Lines inside a paragraph are joined with single
// spaces and surrounding whitespace is trimmed; empty paragraphs vanish.
inline std::vector<std::string> split_paragraphs(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) paragraphs.push_back(std::move(current));
    current.clear();
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t b = 0, e = line.size();
    while (b < e && is_space_byte(line[b])) ++b;
    while (e > b && is_space_byte(line[e - 1])) --e;
    line = line.substr(b, e - b);
    if (line.empty()) {
      flush();
    } else {
      if (!current.empty()) current.push_back(' ');
      current.append(line);
    }
    pos = eol + 1;
  }
  flush();
  return paragraphs;
}

inline std::string join_paragraphs(const std::vector<std::string>& paragraphs) {
  std::string out;
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += paragraphs[i];
  }
  if (!paragraphs.empty()) out += "\n";
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace lipogram

#endif  // LIPOGRAM_TEXT_HPP_
