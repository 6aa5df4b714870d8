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

// Rewrites a short passage without the letter "e" using each method.
//
//   quickstart [corpus.txt lexicon.tsv]

#include <iostream>
#include <string>
#include <vector>

#include "lipogram/lipogram.hpp"

int main(int argc, char** argv) {
  using namespace lipogram;
  const std::string corpus_path = argc > 1 ? argv[1] : "data/gatsby.txt";
  const std::string lexicon_path = argc > 2 ? argv[2] : "data/lexicon.tsv";
  try {
    const auto corpus = split_paragraphs(read_file(corpus_path));
    const Lexicon lexicon = load_lexicon(lexicon_path);
    const NGramModel model = NGramModel::train(corpus, 3);
    const TfIdfEmbedder scorer = TfIdfEmbedder::from_documents(corpus);

    const std::vector<std::string> passage = {
        "In my younger and more vulnerable years my father gave me some advice that I've "
        "been turning over in my mind ever since."};
    const ConstraintSet no_e = ConstraintSet::parse("e");
    PipelineResources res{&lexicon, &model, &scorer, nullptr, nullptr};

    for (const Method method : {Method::kEDelete, Method::kSynonym, Method::kBeam}) {
      TranslationOptions options;
      options.method = method;
      const auto out = translate_document(passage, no_e, options, res);
      std::cout << method_name(method) << ": " << out.paragraphs.front() << "\n  similarity "
                << scorer.similarity(passage.front(), out.paragraphs.front()) << ", E-score "
                << e_score(out.paragraphs.front(), no_e) << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
