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
#include "lipogram/metrics.hpp"
#include "lipogram/pipeline.hpp"

namespace lipogram {
namespace {

class Pipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto all = split_paragraphs(read_file(testing::data_path("gatsby.txt")));
    corpus_ = new std::vector<std::string>(all.begin(), all.begin() + 120);
    model_ = new NGramModel(NGramModel::train(*corpus_, 3));
    scorer_ = new TfIdfEmbedder(TfIdfEmbedder::from_documents(*corpus_));
    lexicon_ = new Lexicon(testing::toy_lexicon());
  }
  static void TearDownTestSuite() {
    delete corpus_;
    delete model_;
    delete scorer_;
    delete lexicon_;
  }

  PipelineResources resources(GrammarProvider* grammar = nullptr) const {
    PipelineResources res;
    res.lexicon = lexicon_;
    res.model = model_;
    res.scorer = scorer_;
    res.grammar = grammar;
    return res;
  }

  static TranslationOptions quiet(Method method) {
    TranslationOptions options;
    options.method = method;
    options.decoder.beam_width = 8;
    options.decoder.candidates_k = 3;
    options.warn = [](std::string_view) {};
    return options;
  }

  static std::vector<std::string>* corpus_;
  static NGramModel* model_;
  static TfIdfEmbedder* scorer_;
  static Lexicon* lexicon_;
};

std::vector<std::string>* Pipeline::corpus_ = nullptr;
NGramModel* Pipeline::model_ = nullptr;
TfIdfEmbedder* Pipeline::scorer_ = nullptr;
Lexicon* Pipeline::lexicon_ = nullptr;

TEST_F(Pipeline, EveryMethodSatisfiesTheConstraint) {
  std::mt19937_64 rng(77);
  testing::AdversarialGrammar grammar({"the", "eel", "quiz", "", "a"}, 5);
  for (int trial = 0; trial < 24; ++trial) {
    ConstraintSet c = testing::random_constraint(rng, 4);
    if (c.empty()) c.insert('e');
    std::vector<std::string> doc;
    for (int i = 0; i < 3; ++i) doc.push_back((*corpus_)[rng() % corpus_->size()]);
    if (trial % 4 == 0) doc.push_back(testing::random_text(rng, 10));
    const Method method = static_cast<Method>(trial % 3);
    const auto out = translate_document(doc, c, quiet(method), resources(&grammar));
    ASSERT_EQ(out.paragraphs.size(), doc.size());
    for (const auto& p : out.paragraphs) {
      EXPECT_EQ(e_score(p, c), 0.0) << method_name(method) << " '" << c.label() << "': " << p;
    }
  }
}

TEST_F(Pipeline, BeamOutputIsCleanProse) {
  const std::vector<std::string> doc(corpus_->begin(), corpus_->begin() + 4);
  const auto out = translate_document(doc, ConstraintSet::parse("e"), quiet(Method::kBeam), resources());
  for (const auto& p : out.paragraphs) {
    ASSERT_FALSE(p.empty());
    EXPECT_TRUE(is_ascii_upper(p.front()) || p.front() == '"') << p;
    EXPECT_TRUE(p.back() == '.' || p.back() == '!' || p.back() == '?') << p;
    EXPECT_EQ(p.find(" ."), std::string::npos) << p;
    EXPECT_EQ(p.find("  "), std::string::npos) << p;
  }
}

TEST_F(Pipeline, ReproducibleForFixedSeed) {
  const std::vector<std::string> doc(corpus_->begin() + 5, corpus_->begin() + 8);
  for (auto mode : {DecodeMode::kDeterministic, DecodeMode::kSampled}) {
    TranslationOptions options = quiet(Method::kBeam);
    options.decoder.mode = mode;
    options.decoder.seed = 11;
    const auto a = translate_document(doc, ConstraintSet::parse("t"), options, resources());
    const auto b = translate_document(doc, ConstraintSet::parse("t"), options, resources());
    EXPECT_EQ(a.paragraphs, b.paragraphs);
  }
}

TEST_F(Pipeline, SimpleMethodsMatchTheirDefinitions) {
  const std::vector<std::string> doc = {"My father gave me some advice.", "People change."};
  const ConstraintSet c = ConstraintSet::parse("e");
  const auto del = translate_document(doc, c, quiet(Method::kEDelete), resources());
  const auto syn = translate_document(doc, c, quiet(Method::kSynonym), resources());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    EXPECT_EQ(del.paragraphs[i], translate_edelete(doc[i], c));
    EXPECT_EQ(syn.paragraphs[i], translate_synonym(doc[i], c, *lexicon_));
  }
  EXPECT_EQ(del.paragraphs[0], "My fathr gav m som advic.");
}

TEST_F(Pipeline, EmptyVocabularyYieldsEmptyParagraph) {
  std::vector<std::string> warnings;
  TranslationOptions options = quiet(Method::kBeam);
  options.warn = [&](std::string_view w) { warnings.emplace_back(w); };
  // No word in the model avoids every letter.
  ConstraintSet all;
  for (char ch = 'a'; ch <= 'z'; ++ch) all.insert(ch);
  const auto out = translate_document({"The end."}, all, options, resources());
  ASSERT_EQ(out.paragraphs.size(), 1u);
  EXPECT_EQ(out.paragraphs[0], "");
  EXPECT_EQ(out.warnings, 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST_F(Pipeline, DecodeFailurePropagatesUnlessTolerated) {
  TranslationOptions options = quiet(Method::kBeam);
  options.decoder.min_ratio = 0.6;
  options.decoder.max_ratio = 0.6;
  EXPECT_THROW(translate_document({"Yes."}, ConstraintSet::parse("e"), options, resources()),
               DecodeFailure);
  options.tolerate_decode_failure = true;
  const auto out = translate_document({"Yes.", "..."}, ConstraintSet::parse("e"), options, resources());
  EXPECT_EQ(out.paragraphs, (std::vector<std::string>{"", "..."}));
  EXPECT_EQ(out.warnings, 1u);
}

TEST_F(Pipeline, MissingResourcesAreInputErrors) {
  PipelineResources res;
  EXPECT_THROW(translate_document({"a"}, ConstraintSet(), quiet(Method::kEDelete), res), InputError);
  res.lexicon = lexicon_;
  EXPECT_THROW(translate_document({"a"}, ConstraintSet(), quiet(Method::kBeam), res), InputError);
  EXPECT_EQ(parse_method("synonym"), Method::kSynonym);
  EXPECT_THROW(parse_method("magic"), InputError);
}

}  // namespace
}  // namespace lipogram
