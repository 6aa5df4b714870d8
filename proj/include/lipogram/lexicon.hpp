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

// Thesaurus resource and the two substitution baselines.
//
// Lexicon files are TSV, one entry per line:
//
//   word<TAB>lemma<TAB>syn1,syn2,...<TAB>frequency
//
// Lines starting with '#' and blank lines are ignored. The synonym column may
// be empty. Dictionary files hold one lowercase word per line.

#ifndef LIPOGRAM_LEXICON_HPP_
#define LIPOGRAM_LEXICON_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lipogram/error.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

struct LexiconEntry {
  std::string word;
  std::string lemma;
  std::vector<std::string> synonyms;
  std::uint64_t corpus_frequency = 0;
};

class Dictionary {
 public:
  void add(std::string_view word) { words_.insert(normalize_word(word)); }
  bool contains(std::string_view word) const {
    return words_.count(normalize_word(word)) > 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

class Lexicon {
 public:
  // Keeps the first entry for a word; later duplicates are ignored.
  bool add(LexiconEntry entry) {
    entry.word = normalize_word(entry.word);
    entry.lemma = normalize_word(entry.lemma.empty() ? entry.word : entry.lemma);
    std::string key = entry.word;
    return entries_.emplace(std::move(key), std::move(entry)).second;
  }

  const LexiconEntry* find(std::string_view word) const {
    auto it = entries_.find(normalize_word(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::uint64_t frequency(std::string_view word) const {
    const LexiconEntry* entry = find(word);
    return entry ? entry->corpus_frequency : 0;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Used for OOV scoring; loaded separately from the thesaurus.
  Dictionary dictionary;

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_space_byte);
}

}  // namespace detail

inline Lexicon parse_lexicon(std::istream& in, const std::string& source = "lexicon") {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": " + why);
    };
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 4) {
      fail("expected 4 tab-separated columns (word, lemma, synonyms, frequency), got " +
           std::to_string(fields.size()));
    }
    LexiconEntry entry;
    entry.word = normalize_word(fields[0]);
    entry.lemma = normalize_word(fields[1]);
    if (entry.word.empty() || detail::has_space(entry.word)) fail("bad word column");
    if (entry.lemma.empty() || detail::has_space(entry.lemma)) fail("bad lemma column");
    if (!fields[2].empty()) {
      for (std::string_view syn : detail::split(fields[2], ',')) {
        if (syn.empty()) continue;
        if (detail::has_space(syn)) fail("synonym contains whitespace");
        entry.synonyms.push_back(normalize_word(syn));
      }
    }
    const std::string_view freq = fields[3];
    const auto [ptr, ec] =
        std::from_chars(freq.data(), freq.data() + freq.size(), entry.corpus_frequency);
    if (ec != std::errc() || ptr != freq.data() + freq.size() || freq.empty()) {
      fail("frequency must be a nonnegative integer");
    }
    lexicon.add(std::move(entry));
  }
  return lexicon;
}

inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon '" + path + "'");
  return parse_lexicon(in, path);
}

inline Dictionary parse_dictionary(std::istream& in) {
  Dictionary dictionary;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = line;
    while (!word.empty() && is_space_byte(word.back())) word.remove_suffix(1);
    while (!word.empty() && is_space_byte(word.front())) word.remove_prefix(1);
    if (!word.empty() && word.front() != '#') dictionary.add(word);
  }
  return dictionary;
}

inline Dictionary load_dictionary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dictionary '" + path + "'");
  return parse_dictionary(in);
}

// Synonyms of the word and of its lemma that avoid every forbidden letter,
// most frequent first (ties lexicographic). The word itself is never listed.
inline std::vector<std::string> constraint_free_synonyms(
    std::string_view word, const ConstraintSet& constraint, const Lexicon& lexicon) {
  const std::string key = normalize_word(word);
  std::vector<std::string> pool;
  auto collect = [&](const LexiconEntry* entry) {
    if (entry == nullptr) return;
    for (const auto& syn : entry->synonyms) {
      if (syn == key || violates(syn, constraint)) continue;
      if (std::find(pool.begin(), pool.end(), syn) == pool.end()) pool.push_back(syn);
    }
  };
  const LexiconEntry* entry = lexicon.find(key);
  collect(entry);
  if (entry != nullptr && entry->lemma != key) collect(lexicon.find(entry->lemma));
  std::stable_sort(pool.begin(), pool.end(), [&](const auto& a, const auto& b) {
    const auto fa = lexicon.frequency(a);
    const auto fb = lexicon.frequency(b);
    if (fa != fb) return fa > fb;
    return a < b;
  });
  return pool;
}

// Copies the case pattern of `original` onto `replacement`: all-caps words
// (two or more letters) give all-caps output, a leading capital gives a
// leading capital, anything else stays lowercase.
inline std::string transfer_case(std::string_view original, std::string replacement) {
  int letters = 0, upper = 0;
  for (char ch : original) {
    if (is_ascii_letter(ch)) {
      ++letters;
      if (is_ascii_upper(ch)) ++upper;
    }
  }
  if (letters >= 2 && upper == letters) {
    for (char& ch : replacement) ch = to_upper_ascii(ch);
  } else if (!original.empty() && is_ascii_upper(original.front())) {
    for (char& ch : replacement) {
      if (is_ascii_letter(ch)) {
        ch = to_upper_ascii(ch);
        break;
      }
    }
  }
  return replacement;
}

inline std::string translate_edelete(std::string_view paragraph,
                                     const ConstraintSet& constraint) {
  TokenSeq tokens = tokenize(paragraph);
  for (auto& token : tokens) {
    if (token.kind == TokenKind::kWord) token.text = strip_letters(token.text, constraint);
  }
  return detokenize(tokens);
}

inline std::string translate_synonym(std::string_view paragraph,
                                     const ConstraintSet& constraint,
                                     const Lexicon& lexicon) {
  TokenSeq tokens = tokenize(paragraph);
  for (auto& token : tokens) {
    if (token.kind != TokenKind::kWord || !violates(token.text, constraint)) continue;
    const auto synonyms = constraint_free_synonyms(token.text, constraint, lexicon);
    token.text = synonyms.empty() ? strip_letters(token.text, constraint)
                                  : transfer_case(token.text, synonyms.front());
  }
  return detokenize(tokens);
}

}  // namespace lipogram

#endif  // LIPOGRAM_LEXICON_HPP_
