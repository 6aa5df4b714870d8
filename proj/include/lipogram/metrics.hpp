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

// Evaluation metrics for lipogram translations.

#ifndef LIPOGRAM_METRICS_HPP_
#define LIPOGRAM_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/grammar.hpp"
#include "lipogram/lexicon.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

// Percentage of word tokens containing a forbidden letter; 0 for no words.
inline double e_score(std::string_view text, const ConstraintSet& constraint) {
  std::size_t total = 0, bad = 0;
  for (const auto& token : tokenize(text)) {
    if (token.kind != TokenKind::kWord) continue;
    ++total;
    if (violates(token.text, constraint)) ++bad;
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(bad) / static_cast<double>(total);
}

inline double oov_score(std::string_view text, const Dictionary& dictionary) {
  std::size_t total = 0, missing = 0;
  for (const auto& token : tokenize(text)) {
    if (token.kind != TokenKind::kWord) continue;
    ++total;
    if (!dictionary.contains(token.text)) ++missing;
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(missing) / static_cast<double>(total);
}

// Vowel groups (a, e, i, o, u, y), at least one per word.
inline int syllable_count(std::string_view word) {
  int groups = 0;
  bool in_group = false;
  for (char ch : word) {
    const char c = to_lower_ascii(ch);
    const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  return groups < 1 ? 1 : groups;
}

struct TextCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
};

// Sentences are stretches between '.', '!' or '?' that contain a word.
inline TextCounts count_text(std::string_view text) {
  TextCounts counts;
  bool sentence_has_word = false;
  for (const auto& token : tokenize(text)) {
    if (token.kind == TokenKind::kWord) {
      ++counts.words;
      counts.syllables += static_cast<std::size_t>(syllable_count(token.text));
      sentence_has_word = true;
    } else if (token.kind == TokenKind::kPunct &&
               (token.text == "." || token.text == "!" || token.text == "?")) {
      if (sentence_has_word) ++counts.sentences;
      sentence_has_word = false;
    }
  }
  if (sentence_has_word) ++counts.sentences;
  return counts;
}

// Flesch Reading Ease. Higher is easier. Throws InputError without words.
inline double readability(std::string_view text) {
  const TextCounts c = count_text(text);
  if (c.words == 0) throw InputError("readability needs at least one word");
  const double words = static_cast<double>(c.words);
  return 206.835 - 1.015 * (words / static_cast<double>(c.sentences)) -
         84.6 * (static_cast<double>(c.syllables) / words);
}

struct GrammarCount {
  std::size_t count = 0;
  double percent_of_words = 0.0;
};

// Propagates ProviderUnavailable; a reachable provider with no matches
// yields a zero count.
inline GrammarCount grammar_mistakes(std::string_view text, GrammarProvider& provider) {
  GrammarCount result;
  const std::size_t words = word_tokens(text).size();
  if (words == 0) return result;
  result.count = provider.check(text).size();
  result.percent_of_words = 100.0 * static_cast<double>(result.count) / static_cast<double>(words);
  return result;
}

struct ParagraphMetrics {
  std::size_t index = 0;
  double similarity = 0.0;
  double e_score = 0.0;
  double oov = 0.0;
  std::size_t grammar_count = 0;
  double grammar_pct = 0.0;
  std::optional<double> readability;  // absent for paragraphs without words
};

struct AggregateMetrics {
  double similarity = 0.0;
  double e_score = 0.0;
  double oov = 0.0;
  double grammar_count = 0.0;
  double grammar_pct = 0.0;
  std::optional<double> readability;
};

struct EvaluationReport {
  std::vector<ParagraphMetrics> paragraphs;
  std::optional<AggregateMetrics> aggregates;  // absent for empty documents
};

inline AggregateMetrics aggregate(const std::vector<ParagraphMetrics>& rows) {
  AggregateMetrics agg;
  double readability_sum = 0.0;
  std::size_t readability_n = 0;
  for (const auto& row : rows) {
    agg.similarity += row.similarity;
    agg.e_score += row.e_score;
    agg.oov += row.oov;
    agg.grammar_count += static_cast<double>(row.grammar_count);
    agg.grammar_pct += row.grammar_pct;
    if (row.readability) {
      readability_sum += *row.readability;
      ++readability_n;
    }
  }
  const double n = static_cast<double>(rows.size());
  agg.similarity /= n;
  agg.e_score /= n;
  agg.oov /= n;
  agg.grammar_count /= n;
  agg.grammar_pct /= n;
  if (readability_n > 0) agg.readability = readability_sum / static_cast<double>(readability_n);
  return agg;
}

inline EvaluationReport evaluate_document(const std::vector<std::string>& source,
                                          const std::vector<std::string>& translated,
                                          const ConstraintSet& constraint,
                                          const Dictionary& dictionary,
                                          GrammarProvider& grammar, const Embedder& embedder) {
  if (source.size() != translated.size()) {
    throw InputError("paragraph count mismatch: source has " + std::to_string(source.size()) +
                     ", translation has " + std::to_string(translated.size()));
  }
  EvaluationReport report;
  for (std::size_t i = 0; i < source.size(); ++i) {
    ParagraphMetrics row;
    row.index = i;
    row.similarity = cosine_similarity(embedder.embed(source[i]), embedder.embed(translated[i]));
    row.e_score = e_score(translated[i], constraint);
    row.oov = oov_score(translated[i], dictionary);
    const GrammarCount g = grammar_mistakes(translated[i], grammar);
    row.grammar_count = g.count;
    row.grammar_pct = g.percent_of_words;
    if (!word_tokens(translated[i]).empty()) row.readability = readability(translated[i]);
    report.paragraphs.push_back(row);
  }
  if (!report.paragraphs.empty()) report.aggregates = aggregate(report.paragraphs);
  return report;
}

inline nlohmann::json to_json(const EvaluationReport& report,
                              const nlohmann::json& config_echo = nlohmann::json::object()) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& p : report.paragraphs) {
    rows.push_back({{"index", p.index},
                    {"similarity", p.similarity},
                    {"e_score", p.e_score},
                    {"oov", p.oov},
                    {"grammar_count", p.grammar_count},
                    {"grammar_pct", p.grammar_pct},
                    {"readability", p.readability ? json(*p.readability) : json(nullptr)}});
  }
  json aggregates = json::object();
  if (report.aggregates) {
    const auto& a = *report.aggregates;
    aggregates = {{"similarity", a.similarity},
                  {"e_score", a.e_score},
                  {"oov", a.oov},
                  {"grammar_count", a.grammar_count},
                  {"grammar_pct", a.grammar_pct},
                  {"readability", a.readability ? json(*a.readability) : json(nullptr)},
                  {"readability_metric", "flesch_reading_ease"}};
  }
  return {{"paragraphs", rows}, {"aggregates", aggregates}, {"config_echo", config_echo}};
}

}  // namespace lipogram

#endif  // LIPOGRAM_METRICS_HPP_
