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

// Whole-document translation for the three methods.
//
// Beam translation of a paragraph runs, in order: entity aliasing of the
// source, beam search, multiselection, rendering, entity map, pronoun pass,
// punctuation normalization, long-list removal, suffix trimming and grammar
// correction.

#ifndef LIPOGRAM_PIPELINE_HPP_
#define LIPOGRAM_PIPELINE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lipogram/decoder.hpp"
#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/grammar.hpp"
#include "lipogram/lexicon.hpp"
#include "lipogram/ngram.hpp"
#include "lipogram/passes.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

enum class Method { kEDelete, kSynonym, kBeam };

inline Method parse_method(std::string_view name) {
  if (name == "edelete") return Method::kEDelete;
  if (name == "synonym") return Method::kSynonym;
  if (name == "beam") return Method::kBeam;
  throw InputError("unknown method '" + std::string(name) + "' (edelete, synonym, beam)");
}

inline std::string method_name(Method method) {
  switch (method) {
    case Method::kEDelete:
      return "edelete";
    case Method::kSynonym:
      return "synonym";
    case Method::kBeam:
      return "beam";
  }
  return {};
}

// Borrowed, immutable-during-translation resources. `model` and `scorer`
// are only needed by the beam method; `selector` defaults to `scorer` and
// drives multiselection and trimming.
struct PipelineResources {
  const Lexicon* lexicon = nullptr;
  const NGramModel* model = nullptr;
  const TfIdfEmbedder* scorer = nullptr;
  const Embedder* selector = nullptr;
  GrammarProvider* grammar = nullptr;
};

struct TranslationOptions {
  Method method = Method::kBeam;
  DecoderConfig decoder;
  // When set, a DecodeFailure yields an empty paragraph and a warning
  // instead of propagating.
  bool tolerate_decode_failure = false;
  WarningSink warn = warn_to_stderr;
};

struct TranslationResult {
  std::vector<std::string> paragraphs;  // same length as the input
  std::size_t warnings = 0;
};

namespace detail {

inline bool ends_sentence(std::string_view text) {
  return !text.empty() && (text.back() == '.' || text.back() == '!' || text.back() == '?');
}

inline std::string beam_paragraph(std::string_view paragraph, const ConstraintSet& constraint,
                                  const EntityMap& entities, const TranslationOptions& options,
                                  const PipelineResources& res) {
  const std::string source = apply_entity_map(paragraph, entities);
  if (normalized_words(source).empty()) return strip_letters(source, constraint);
  const Embedder& selector = res.selector != nullptr ? *res.selector : *res.scorer;
  const auto candidates =
      beam_search(source, constraint, options.decoder, *res.model, *res.lexicon, *res.scorer);
  const Hypothesis& best = multiselect(candidates, source, selector);
  std::string text = render_hypothesis(best.tokens, source);
  text = apply_entity_map(text, entities);
  text = resolve_pronouns(text, entities, entities.window_size);
  text = normalize_punctuation(text);
  text = drop_long_lists(text);
  if (!normalized_words(text).empty()) {
    text = trim_suffix(text, source, selector);
    if (!ends_sentence(text)) text.push_back('.');
  }
  if (res.grammar != nullptr) text = grammar_correct(text, constraint, *res.grammar, options.warn);
  return text;
}

}  // namespace detail

inline TranslationResult translate_document(const std::vector<std::string>& paragraphs,
                                            const ConstraintSet& constraint,
                                            const TranslationOptions& options,
                                            const PipelineResources& res) {
  if (res.lexicon == nullptr) throw InputError("translation needs a lexicon");
  if (options.method == Method::kBeam && (res.model == nullptr || res.scorer == nullptr)) {
    throw InputError("beam translation needs a language model and a TF-IDF scorer");
  }
  TranslationResult result;
  result.paragraphs.reserve(paragraphs.size());
  if (options.method != Method::kBeam) {
    for (const auto& p : paragraphs) {
      result.paragraphs.push_back(options.method == Method::kEDelete
                                      ? translate_edelete(p, constraint)
                                      : translate_synonym(p, constraint, *res.lexicon));
    }
    return result;
  }
  const EntityMap entities = build_entity_table(paragraphs, constraint);
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    try {
      result.paragraphs.push_back(
          detail::beam_paragraph(paragraphs[i], constraint, entities, options, res));
    } catch (const EmptyVocabulary& e) {
      ++result.warnings;
      options.warn("paragraph " + std::to_string(i) + ": " + e.what());
      result.paragraphs.emplace_back();
    } catch (const DecodeFailure& e) {
      if (!options.tolerate_decode_failure) throw;
      ++result.warnings;
      options.warn("paragraph " + std::to_string(i) + ": " + e.what());
      result.paragraphs.emplace_back();
    }
  }
  return result;
}

}  // namespace lipogram

#endif  // LIPOGRAM_PIPELINE_HPP_
