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

// Shared test fixtures: a toy lexicon, provider stubs and random text.

#ifndef LIPOGRAM_TESTS_FIXTURES_HPP_
#define LIPOGRAM_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lipogram/lipogram.hpp"

namespace lipogram::testing {

inline std::string data_path(const std::string& name) {
  return std::string(LIPOGRAM_DATA_DIR) + "/" + name;
}

inline constexpr std::string_view kToyLexicon =
    "# word\tlemma\tsynonyms\tfrequency\n"
    "advice\tadvice\tguidance,counsel,tip\t500\n"
    "guidance\tguidance\tadvice,counsel\t300\n"
    "counsel\tcounsel\tadvice,guidance\t200\n"
    "tip\ttip\tadvice,hint\t900\n"
    "people\tpeople\tpersons,folks\t1000\n"
    "persons\tperson\tpeople\t100\n"
    "folks\tfolk\tpeople\t100\n"
    "gave\tgive\t\t800\n"
    "give\tgive\tafford,grant\t900\n"
    "afford\tafford\tgive\t50\n"
    "grant\tgrant\tgive\t60\n"
    "years\tyear\t\t700\n"
    "year\tyear\tdays,twelvemonth\t700\n"
    "days\tday\t\t600\n";

inline Lexicon toy_lexicon() {
  std::istringstream in{std::string(kToyLexicon)};
  return parse_lexicon(in, "toy");
}

// Returns a fixed list of matches for every call.
class StubGrammar : public GrammarProvider {
 public:
  explicit StubGrammar(std::vector<GrammarMatch> matches) : matches_(std::move(matches)) {}
  std::vector<GrammarMatch> check(std::string_view) override { return matches_; }

 private:
  std::vector<GrammarMatch> matches_;
};

class UnreachableGrammar : public GrammarProvider {
 public:
  std::vector<GrammarMatch> check(std::string_view) override {
    throw ProviderUnavailable("connection refused");
  }
};

// Suggests a replacement for every word, drawn from `pool`.
class AdversarialGrammar : public GrammarProvider {
 public:
  AdversarialGrammar(std::vector<std::string> pool, std::uint64_t seed)
      : pool_(std::move(pool)), rng_(seed) {}

  std::vector<GrammarMatch> check(std::string_view text) override {
    std::vector<GrammarMatch> out;
    std::size_t offset = 0;
    for (const auto& token : tokenize(text)) {
      if (token.kind == TokenKind::kWord || rng_() % 4 == 0) {
        std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
        GrammarMatch m;
        m.offset = offset;
        m.length = rng_() % 3 == 0 ? 0 : token.text.size();
        m.replacement = pool_[pick(rng_)];
        out.push_back(m);
      }
      offset += token.text.size();
    }
    if (!text.empty()) out.push_back({text.size(), 0, std::string(" the"), "append"});
    return out;
  }

 private:
  std::vector<std::string> pool_;
  std::mt19937_64 rng_;
};

// Words from a small vocabulary mixed with punctuation, quotes, curly
// apostrophes and irregular spacing.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_words = 30) {
  static const std::vector<std::string> kWords = {
      "the", "cat", "sat", "Gatsby", "Daisy", "old", "sport", "haven\xE2\x80\x99t", "I'm",
      "green", "light", "Eve", "mind", "advice", "people", "years", "a", "Tom", "quick",
      "wizard", "jumbo", "fox", "O'Neil", "Mr", "Miss", "Baker", "he", "her", "they"};
  static const std::vector<std::string> kGlue = {
      " ", " ", " ", ", ", ". ", "  ", " , ", "! ", "? ", " \"", "\" ", "``", "''", "; ",
      "\xE2\x80\x94", " \xE2\x80\x9C", "\xE2\x80\x9D ", "\t", "'", " - "};
  std::uniform_int_distribution<std::size_t> n_words(0, max_words);
  std::uniform_int_distribution<std::size_t> w(0, kWords.size() - 1);
  std::uniform_int_distribution<std::size_t> g(0, kGlue.size() - 1);
  std::string out;
  const std::size_t n = n_words(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 3 == 0) out += kGlue[g(rng)];
    out += kWords[w(rng)];
    out += kGlue[g(rng)];
  }
  return out;
}

inline ConstraintSet random_constraint(std::mt19937_64& rng, std::size_t max_size = 3) {
  ConstraintSet c;
  const std::size_t n = rng() % (max_size + 1);
  for (std::size_t i = 0; i < n; ++i) c.insert(static_cast<char>('a' + rng() % 26));
  return c;
}

}  // namespace lipogram::testing

#endif  // LIPOGRAM_TESTS_FIXTURES_HPP_
