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

// Document-level passes run around the decoder: entity aliasing, pronoun
// substitution and text clean-up.

#ifndef LIPOGRAM_PASSES_HPP_
#define LIPOGRAM_PASSES_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/grammar.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

inline constexpr std::size_t kDefaultPronounWindow = 25;
inline constexpr std::size_t kLongListThreshold = 8;

struct EntityMap {
  // (surface form, alias) in first-seen order. Aliases are pairwise distinct.
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t window_size = kDefaultPronounWindow;

  bool empty() const { return entries.empty(); }

  const std::string* alias_of(std::string_view surface) const {
    for (const auto& [s, a] : entries) {
      if (s == surface) return &a;
    }
    return nullptr;
  }
};

namespace detail {

inline bool is_honorific(std::string_view word) {
  return word == "Mr" || word == "Mrs" || word == "Dr" || word == "Miss" || word == "Ms";
}

inline bool is_sentence_end(std::string_view punct) {
  return punct == "." || punct == "!" || punct == "?";
}

inline bool is_opening_quote(const TokenSeq& tokens, std::size_t i) {
  const std::string& t = tokens[i].text;
  if (t == "\xE2\x80\x9C") return true;  // U+201C
  if (t != "\"") return false;
  return i == 0 || tokens[i - 1].kind == TokenKind::kSpace;
}

inline bool starts_upper(std::string_view word) { return !word.empty() && is_ascii_upper(word[0]); }

inline bool is_first_person(std::string_view word) {
  const std::string w = normalize_word(word);
  return w == "i" || w.rfind("i'", 0) == 0;
}

// Capitalized-word sequence found in a paragraph.
struct Candidate {
  std::string surface;
  bool sentence_initial;
};

inline std::vector<Candidate> scan_capitalized(std::string_view paragraph) {
  const TokenSeq tokens = tokenize(paragraph);
  std::vector<Candidate> found;
  bool sentence_start = true;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& token = tokens[i];
    if (token.kind == TokenKind::kPunct) {
      if (is_sentence_end(token.text) || is_opening_quote(tokens, i)) sentence_start = true;
      ++i;
      continue;
    }
    if (token.kind == TokenKind::kSpace) {
      ++i;
      continue;
    }
    if (!starts_upper(token.text) || is_first_person(token.text)) {
      sentence_start = false;
      ++i;
      continue;
    }
    // Honorific-led sequence: "Mr. Gatsby", "Miss Baker".
    std::size_t j = i;
    std::string surface;
    bool honorific = false;
    if (is_honorific(token.text)) {
      std::size_t k = i + 1;
      std::string head = token.text;
      if (k < tokens.size() && tokens[k].text == ".") {
        head += '.';
        ++k;
      }
      if (k + 1 < tokens.size() && tokens[k].text == " " && tokens[k + 1].kind == TokenKind::kWord &&
          starts_upper(tokens[k + 1].text)) {
        honorific = true;
        surface = head;
        j = k;
      }
    }
    if (!honorific) {
      surface = token.text;
      j = i + 1;
    }
    // Extend over single-space-separated capitalized words.
    while (j + 1 < tokens.size() && tokens[j].text == " " && tokens[j + 1].kind == TokenKind::kWord &&
           starts_upper(tokens[j + 1].text) && !is_first_person(tokens[j + 1].text) &&
           !is_honorific(tokens[j + 1].text)) {
      surface += ' ';
      surface += tokens[j + 1].text;
      j += 2;
    }
    found.push_back({surface, sentence_start && !honorific});
    sentence_start = false;
    i = j;
  }
  return found;
}

inline std::string collapse_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(ch);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Byte offsets where `pattern` occurs in `text` bounded by non-letters.
inline bool matches_at(std::string_view text, std::size_t pos, std::string_view pattern) {
  if (text.compare(pos, pattern.size(), pattern) != 0) return false;
  if (pos > 0 && is_ascii_letter(text[pos - 1])) return false;
  const std::size_t end = pos + pattern.size();
  return end == text.size() || !is_ascii_letter(text[end]);
}

}  // namespace detail

// Entities are maximal runs of capitalized words that do not open a
// sentence, plus honorific-led runs. A run that only ever opens sentences is
// ignored. Aliases strip the forbidden letters; an empty or already-taken
// alias gets the first free suffix "2", "3", ...
inline EntityMap build_entity_table(const std::vector<std::string>& document,
                                    const ConstraintSet& constraint) {
  std::vector<detail::Candidate> all;
  for (const auto& paragraph : document) {
    for (auto& c : detail::scan_capitalized(paragraph)) all.push_back(std::move(c));
  }
  std::unordered_set<std::string> confirmed;
  for (const auto& c : all) {
    if (!c.sentence_initial) confirmed.insert(c.surface);
  }
  EntityMap map;
  std::unordered_set<std::string> seen;
  std::unordered_set<std::string> used_aliases;
  for (const auto& c : all) {
    if (!confirmed.count(c.surface) || !seen.insert(c.surface).second) continue;
    const std::string base = detail::collapse_spaces(strip_letters(c.surface, constraint));
    std::string alias = base;
    for (int suffix = 2; alias.empty() || used_aliases.count(alias); ++suffix) {
      alias = base + std::to_string(suffix);
    }
    used_aliases.insert(alias);
    map.entries.emplace_back(c.surface, alias);
  }
  return map;
}

// Replaces entity surface forms by their aliases, longest match first, only
// at letter boundaries.
inline std::string apply_entity_map(std::string_view text, const EntityMap& map) {
  if (map.empty()) return std::string(text);
  std::unordered_map<char, std::vector<const std::pair<std::string, std::string>*>> by_first;
  for (const auto& entry : map.entries) {
    if (!entry.first.empty()) by_first[entry.first[0]].push_back(&entry);
  }
  for (auto& [ch, list] : by_first) {
    std::stable_sort(list.begin(), list.end(),
                     [](const auto* a, const auto* b) { return a->first.size() > b->first.size(); });
  }
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto it = by_first.find(text[pos]);
    bool replaced = false;
    if (it != by_first.end()) {
      for (const auto* entry : it->second) {
        if (detail::matches_at(text, pos, entry->first)) {
          out += entry->second;
          pos += entry->first.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out.push_back(text[pos++]);
  }
  return out;
}

// Replaces he/she/him/her/his/hers/they/them/their by an alias when exactly
// one entity (by surface or alias) occurs within the preceding window of
// words. Possessives take "'s".
inline std::string resolve_pronouns(std::string_view text, const EntityMap& map,
                                    std::size_t window_size) {
  if (map.empty()) return std::string(text);
  static const std::unordered_map<std::string, bool> kPronouns = {
      {"he", false},  {"she", false}, {"him", false}, {"her", false},  {"his", true},
      {"hers", true}, {"they", false}, {"them", false}, {"their", true}};
  std::vector<std::pair<std::string, std::size_t>> patterns;
  for (std::size_t e = 0; e < map.entries.size(); ++e) {
    patterns.emplace_back(map.entries[e].first, e);
    if (map.entries[e].second != map.entries[e].first) patterns.emplace_back(map.entries[e].second, e);
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  const TokenSeq tokens = tokenize(text);
  std::vector<std::pair<std::size_t, std::size_t>> mentions;  // (word index, entity)
  std::string out;
  std::size_t offset = 0;
  std::size_t word_index = 0;
  std::size_t covered_until = 0;
  for (const auto& token : tokens) {
    const std::size_t here = offset;
    offset += token.text.size();
    if (token.kind != TokenKind::kWord) {
      out += token.text;
      continue;
    }
    const std::size_t wi = word_index++;
    if (here < covered_until) {
      out += token.text;
      continue;
    }
    bool is_mention = false;
    for (const auto& [pattern, entity] : patterns) {
      if (detail::matches_at(text, here, pattern)) {
        mentions.emplace_back(wi, entity);
        covered_until = here + pattern.size();
        is_mention = true;
        break;
      }
    }
    const auto pronoun = kPronouns.find(normalize_word(token.text));
    if (is_mention || pronoun == kPronouns.end()) {
      out += token.text;
      continue;
    }
    std::set<std::size_t> in_window;
    for (auto m = mentions.rbegin(); m != mentions.rend() && m->first + window_size >= wi; ++m) {
      in_window.insert(m->second);
    }
    if (in_window.size() != 1) {
      out += token.text;
      continue;
    }
    out += map.entries[*in_window.begin()].second;
    if (pronoun->second) out += "'s";
  }
  return out;
}

namespace detail {

inline std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

inline bool is_blank(char ch) { return ch == ' ' || ch == '\t'; }

inline std::string normalize_paragraph(std::string_view paragraph) {
  std::string text = replace_all(std::string(paragraph), "``", "\"");

  std::string step;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '\'' && i + 1 < text.size() && text[i + 1] == '\'') {
      while (i < text.size() && text[i] == '\'') ++i;
      step.push_back('"');
    } else {
      step.push_back(text[i++]);
    }
  }
  text.swap(step);

  step.clear();
  for (char ch : text) {
    if (ch == ',' || ch == '.' || ch == '!' || ch == '?') {
      while (!step.empty() && is_blank(step.back())) step.pop_back();
    }
    step.push_back(ch);
  }
  text.swap(step);

  step.clear();
  for (std::size_t i = 0; i < text.size(); ++i) {
    step.push_back(text[i]);
    if (text[i] != ',') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_blank(text[j])) ++j;
    if (j < text.size() && is_ascii_letter(text[j])) {
      step.push_back(' ');
      i = j - 1;
    }
  }
  text.swap(step);

  // ASCII double quotes alternate open/close; curly quotes say which they are.
  step.clear();
  bool open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool curly_open = text.compare(i, 3, "\xE2\x80\x9C") == 0;
    const bool curly_close = text.compare(i, 3, "\xE2\x80\x9D") == 0;
    const bool ascii = text[i] == '"';
    bool closing = curly_close || (ascii && open);
    bool opening = curly_open || (ascii && !open);
    if (closing) {
      while (!step.empty() && is_blank(step.back())) step.pop_back();
    }
    if (ascii) open = !open;
    const std::size_t width = (curly_open || curly_close) ? 3 : 1;
    step.append(text, i, width);
    i += width - 1;
    if (opening) {
      while (i + 1 < text.size() && is_blank(text[i + 1])) ++i;
    }
  }
  return step;
}

}  // namespace detail

// Blank-line separated paragraphs, each cleaned up; empty ones are dropped.
inline std::string normalize_punctuation(std::string_view text) {
  std::vector<std::string> kept;
  for (const auto& paragraph : split_paragraphs(text)) {
    std::string clean = detail::normalize_paragraph(paragraph);
    while (!clean.empty() && detail::is_blank(clean.back())) clean.pop_back();
    std::size_t lead = 0;
    while (lead < clean.size() && detail::is_blank(clean[lead])) ++lead;
    clean.erase(0, lead);
    if (!clean.empty()) kept.push_back(std::move(clean));
  }
  std::string out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += kept[i];
  }
  return out;
}

// Drops runs of at least `threshold` single words separated by commas,
// together with the comma that follows the run.
inline std::string drop_long_lists(std::string_view text,
                                   std::size_t threshold = kLongListThreshold) {
  const TokenSeq tokens = tokenize(text);
  std::vector<bool> drop(tokens.size(), false);
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind != TokenKind::kWord) {
      ++i;
      continue;
    }
    std::size_t last = i;
    std::size_t items = 1;
    for (;;) {
      std::size_t k = last + 1;
      if (k >= tokens.size() || tokens[k].text != ",") break;
      ++k;
      if (k < tokens.size() && tokens[k].kind == TokenKind::kSpace) ++k;
      if (k >= tokens.size() || tokens[k].kind != TokenKind::kWord) break;
      last = k;
      ++items;
    }
    if (items >= threshold) {
      std::size_t end = last + 1;
      if (end < tokens.size() && tokens[end].text == ",") ++end;
      if (end < tokens.size() && tokens[end].kind == TokenKind::kSpace) ++end;
      std::fill(drop.begin() + static_cast<std::ptrdiff_t>(i),
                drop.begin() + static_cast<std::ptrdiff_t>(end), true);
      i = end;
    } else {
      i = last + 1;
    }
  }
  std::string out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (drop[t]) continue;
    if (tokens[t].kind == TokenKind::kPunct && detail::is_sentence_end(tokens[t].text)) {
      while (!out.empty() && detail::is_blank(out.back())) out.pop_back();
    }
    out += tokens[t].text;
  }
  while (!out.empty() && detail::is_blank(out.back())) out.pop_back();
  return out;
}

// Byte offsets just past each word token.
inline std::vector<std::size_t> word_cut_points(std::string_view text) {
  std::vector<std::size_t> cuts;
  std::size_t offset = 0;
  for (const auto& token : tokenize(text)) {
    offset += token.text.size();
    if (token.kind == TokenKind::kWord) cuts.push_back(offset);
  }
  return cuts;
}

// The prefix, cut after some word or kept whole, most similar to `source`;
// ties keep the longer prefix.
inline std::string trim_suffix(std::string_view text, std::string_view source,
                               const Embedder& embedder) {
  const EmbeddingVector src = embedder.embed(source);
  std::string_view best = text;
  double best_sim = cosine_similarity(embedder.embed(text), src);
  const auto cuts = word_cut_points(text);
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    const std::string_view prefix = text.substr(0, *it);
    const double sim = cosine_similarity(embedder.embed(prefix), src);
    if (sim > best_sim) {
      best_sim = sim;
      best = prefix;
    }
  }
  return std::string(best);
}

using WarningSink = std::function<void(std::string_view)>;

inline void warn_to_stderr(std::string_view message) {
  std::cerr << "warning: " << message << '\n';
}

namespace detail {

inline bool is_word_byte(std::string_view text, std::size_t pos) {
  return is_ascii_letter(text[pos]) || text[pos] == '\'';
}

// True when every word overlapping [begin, end) is constraint-free.
inline bool region_is_clean(std::string_view text, std::size_t begin, std::size_t end,
                            const ConstraintSet& constraint) {
  while (begin > 0 && is_word_byte(text, begin - 1)) --begin;
  while (end < text.size() && is_word_byte(text, end)) ++end;
  return !violates(text.substr(begin, end - begin), constraint);
}

inline bool on_boundary(std::string_view text, std::size_t pos) {
  return pos >= text.size() || (static_cast<unsigned char>(text[pos]) & 0xC0) != 0x80;
}

}  // namespace detail

// Applies provider suggestions whose result keeps every touched word
// constraint-free. Overlapping suggestions after the first are ignored. An
// unreachable provider leaves the text unchanged and reports a warning.
inline std::string grammar_correct(std::string_view text, const ConstraintSet& constraint,
                                   GrammarProvider& provider,
                                   const WarningSink& warn = warn_to_stderr) {
  std::vector<GrammarMatch> matches;
  try {
    matches = provider.check(text);
  } catch (const ProviderUnavailable& e) {
    warn(std::string("grammar provider unavailable: ") + e.what());
    return std::string(text);
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const GrammarMatch& a, const GrammarMatch& b) { return a.offset < b.offset; });
  std::vector<const GrammarMatch*> accepted;
  std::size_t reach = 0;
  for (const auto& m : matches) {
    if (!m.replacement || m.offset > text.size() || m.length > text.size() - m.offset) continue;
    if (!detail::on_boundary(text, m.offset) || !detail::on_boundary(text, m.offset + m.length)) {
      continue;
    }
    if (!accepted.empty() && m.offset < reach) continue;
    accepted.push_back(&m);
    reach = m.offset + m.length;
  }
  std::string out(text);
  for (auto it = accepted.rbegin(); it != accepted.rend(); ++it) {
    const GrammarMatch& m = **it;
    std::string candidate = out;
    candidate.replace(m.offset, m.length, *m.replacement);
    if (violates(*m.replacement, constraint)) continue;
    if (!detail::region_is_clean(candidate, m.offset, m.offset + m.replacement->size(), constraint)) {
      continue;
    }
    out = std::move(candidate);
  }
  return out;
}

}  // namespace lipogram

#endif  // LIPOGRAM_PASSES_HPP_
