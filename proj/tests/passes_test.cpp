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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "lipogram/metrics.hpp"
#include "lipogram/passes.hpp"

namespace lipogram {
namespace {

TEST(EntityTable, AliasesStripForbiddenLetters) {
  const EntityMap map = build_entity_table({"I met Miss Baker there.", "Then Miss Baker left."},
                                           ConstraintSet::parse("e"));
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries[0].first, "Miss Baker");
  EXPECT_EQ(map.entries[0].second, "Miss Bakr");
  EXPECT_EQ(apply_entity_map("Miss Baker, and Miss Bakers.", map), "Miss Bakr, and Miss Bakers.");
}

TEST(EntityTable, CollidingAliasesTakeSuffixes) {
  const EntityMap map =
      build_entity_table({"We saw Eve and Ev and Ee today."}, ConstraintSet::parse("e"));
  ASSERT_EQ(map.entries.size(), 3u);
  EXPECT_EQ(*map.alias_of("Eve"), "v");
  EXPECT_EQ(*map.alias_of("Ev"), "v2");
  EXPECT_EQ(*map.alias_of("Ee"), "2");
}

TEST(EntityTable, SentenceInitialOnlyWordsAreIgnored) {
  const EntityMap map = build_entity_table({"Then it rained. Then Tom came.", "\"Yes,\" said Tom."},
                                           ConstraintSet::parse("o"));
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries[0].first, "Tom");
  EXPECT_EQ(map.entries[0].second, "Tm");
  EXPECT_EQ(map.alias_of("Then"), nullptr);
  EXPECT_EQ(map.alias_of("Yes"), nullptr);
}

TEST(EntityTable, AliasesAreDistinctAndClean) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> doc;
    for (int i = 0; i < 4; ++i) doc.push_back(testing::random_text(rng));
    const ConstraintSet c = testing::random_constraint(rng, 5);
    const EntityMap map = build_entity_table(doc, c);
    std::set<std::string> aliases;
    for (const auto& [surface, alias] : map.entries) {
      EXPECT_FALSE(violates(alias, c)) << alias;
      EXPECT_FALSE(alias.empty());
      EXPECT_TRUE(aliases.insert(alias).second) << alias;
    }
  }
}

TEST(EntityMap, LongestMatchAtWordBoundaries) {
  EntityMap map;
  map.entries = {{"Tom", "T"}, {"Tom Buchanan", "TB"}};
  EXPECT_EQ(apply_entity_map("Tom Buchanan met Tom and Tommy.", map), "TB met T and Tommy.");
  EXPECT_EQ(apply_entity_map("anyTom", map), "anyTom");
}

TEST(EntityMap, ApplyingTwiceChangesNothing) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> doc;
    for (int i = 0; i < 3; ++i) doc.push_back(testing::random_text(rng));
    const EntityMap map = build_entity_table(doc, testing::random_constraint(rng, 4));
    for (const auto& p : doc) {
      const std::string once = apply_entity_map(p, map);
      EXPECT_EQ(apply_entity_map(once, map), once) << p;
    }
  }
}

class Pronouns : public ::testing::Test {
 protected:
  EntityMap map_ = [] {
    EntityMap m;
    m.entries = {{"Daisy", "Daisy"}, {"Tom", "Tm"}};
    return m;
  }();
};

TEST_F(Pronouns, SingleEntityInWindow) {
  EXPECT_EQ(resolve_pronouns("Daisy smiled. She took his hat.", map_, 25),
            "Daisy smiled. Daisy took Daisy's hat.");
  EXPECT_EQ(resolve_pronouns("Tm ran and he fell.", map_, 25), "Tm ran and Tm fell.");
}

TEST_F(Pronouns, TwoEntitiesLeaveThePronoun) {
  EXPECT_EQ(resolve_pronouns("Daisy and Tom came. He left.", map_, 25),
            "Daisy and Tom came. He left.");
}

TEST_F(Pronouns, NoEntityInWindowLeavesThePronoun) {
  EXPECT_EQ(resolve_pronouns("Daisy a b c d she", map_, 2), "Daisy a b c d she");
  EXPECT_EQ(resolve_pronouns("she went", map_, 25), "she went");
  EXPECT_EQ(resolve_pronouns("she went", EntityMap{}, 25), "she went");
}

TEST(Normalize, QuotesCommasAndBlanks) {
  EXPECT_EQ(normalize_punctuation("``Hello ''"), "\"Hello\"");
  EXPECT_EQ(normalize_punctuation("a ,b"), "a, b");
  EXPECT_EQ(normalize_punctuation("Wait , what ? \" yes \" she said ."),
            "Wait, what? \"yes\" she said.");
  EXPECT_EQ(normalize_punctuation("one\n\n\n \n two"), "one\n\ntwo");
  EXPECT_EQ(normalize_punctuation("\xE2\x80\x9C hi \xE2\x80\x9D"), "\xE2\x80\x9Chi\xE2\x80\x9D");
  EXPECT_EQ(normalize_punctuation(""), "");
}

TEST(Normalize, IsIdempotent) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text = testing::random_text(rng);
    if (rng() % 3 == 0) text += "\n\n" + testing::random_text(rng);
    const std::string once = normalize_punctuation(text);
    EXPECT_EQ(normalize_punctuation(once), once) << text;
  }
}

TEST(Normalize, KeepsEveryWord) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = testing::random_text(rng);
    EXPECT_EQ(normalized_words(normalize_punctuation(text)), normalized_words(text)) << text;
  }
}

TEST(LongLists, DropsRunsAtThreshold) {
  EXPECT_EQ(drop_long_lists("Items: a, b, c, d, f, g, h, i, then done."), "Items: done.");
  EXPECT_EQ(drop_long_lists("Items: a, b, c, d, f, g, h; then done."),
            "Items: a, b, c, d, f, g, h; then done.");
  EXPECT_EQ(drop_long_lists("x a, b, c, d, f, g, h, i."), "x.");
  EXPECT_EQ(drop_long_lists("a, b, c", 3), "");
  EXPECT_EQ(drop_long_lists("a b, c d", 2), "a d");
}

TEST(Trim, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(61);
  std::vector<std::string> docs;
  for (int i = 0; i < 30; ++i) docs.push_back(testing::random_text(rng));
  const TfIdfEmbedder e = TfIdfEmbedder::from_documents(docs);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = testing::random_text(rng, 15);
    const std::string source = testing::random_text(rng, 15);
    EXPECT_EQ(trim_suffix(text, source, e), testing::brute_force_trim(text, source, e)) << text;
  }
}

TEST(Trim, DropsOffTopicTail) {
  const TfIdfEmbedder e = TfIdfEmbedder::from_documents({"green light", "dock", "boats"});
  EXPECT_EQ(trim_suffix("the green light, boats boats", "the green light", e), "the green light");
  EXPECT_EQ(trim_suffix("", "x", e), "");
}

TEST(Grammar, AppliesCleanSuggestion) {
  testing::StubGrammar g({{0, 1, std::string("an"), "article"}});
  EXPECT_EQ(grammar_correct("a apple", ConstraintSet::parse("z"), g), "an apple");
}

TEST(Grammar, RejectsSuggestionsThatViolate) {
  testing::StubGrammar g({{0, 1, std::string("an"), "article"}});
  EXPECT_EQ(grammar_correct("a apple", ConstraintSet::parse("n"), g), "a apple");
  // Deleting the space would fuse "aqua" and "dog" into a forbidden word.
  testing::StubGrammar fuse({{4, 1, std::string(""), "join"}});
  EXPECT_EQ(grammar_correct("aqua dog", ConstraintSet::parse("q"), fuse), "aqua dog");
  // No replacement means nothing to apply.
  testing::StubGrammar bare({{0, 1, std::nullopt, "note"}});
  EXPECT_EQ(grammar_correct("a b", ConstraintSet(), bare), "a b");
}

TEST(Grammar, SkipsOverlapsAndOutOfRangeMatches) {
  testing::StubGrammar g({{0, 3, std::string("X"), "1"}, {2, 3, std::string("Y"), "2"},
                          {40, 1, std::string("Z"), "3"}});
  EXPECT_EQ(grammar_correct("abcdef", ConstraintSet(), g), "Xdef");
}

TEST(Grammar, UnreachableProviderPassesThrough) {
  testing::UnreachableGrammar down;
  std::vector<std::string> warnings;
  const auto sink = [&](std::string_view w) { warnings.emplace_back(w); };
  EXPECT_EQ(grammar_correct("some text", ConstraintSet(), down, sink), "some text");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("unavailable"), std::string::npos);
}

TEST(Grammar, AdversarialSuggestionsNeverBreakTheConstraint) {
  std::mt19937_64 rng(71);
  const std::vector<std::string> pool = {"the", "", "x", "zebra", "quiz", " ", "eel", "a,b",
                                         "\xE2\x80\x99", "hmm", "Q", "e"};
  for (int trial = 0; trial < 500; ++trial) {
    const ConstraintSet c = testing::random_constraint(rng, 4);
    const std::string text = strip_letters(testing::random_text(rng), c);
    testing::AdversarialGrammar provider(pool, rng());
    const std::string out = grammar_correct(text, c, provider, [](std::string_view) {});
    EXPECT_EQ(e_score(out, c), 0.0) << "'" << text << "' -> '" << out << "'";
  }
}

}  // namespace
}  // namespace lipogram
