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

// Deterministic text embeddings: TF-IDF over lowercased word unigrams and
// adjacent-word bigrams, L2-normalized.
//
//   idf(f) = ln((N + 1) / (df(f) + 1)) + 1
//
// N is the number of reference documents and df(f) the number of documents
// containing feature f. Bigrams are keyed "w1 w2" and join consecutive word
// tokens, so punctuation never changes an embedding.

#ifndef LIPOGRAM_EMBEDDING_HPP_
#define LIPOGRAM_EMBEDDING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lipogram/text.hpp"

namespace lipogram {

// Unigram features first, then bigrams, each in text order (with repeats).
inline std::vector<std::string> embedding_features(std::span<const std::string> words) {
  std::vector<std::string> features(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i) {
    features.push_back(words[i - 1] + ' ' + words[i]);
  }
  return features;
}

inline std::vector<std::string> embedding_features(std::string_view text) {
  const auto words = normalized_words(text);
  return embedding_features(words);
}

class IdfTable {
 public:
  IdfTable() = default;

  static IdfTable build(const std::vector<std::string>& documents) {
    IdfTable table;
    table.documents_ = documents.size();
    std::unordered_set<std::string> seen;
    for (const auto& doc : documents) {
      seen.clear();
      for (auto& feature : embedding_features(doc)) seen.insert(std::move(feature));
      for (const auto& feature : seen) ++table.df_[feature];
    }
    for (const auto& [feature, df] : table.df_) {
      const std::size_t space = feature.find(' ');
      if (space != std::string::npos) {
        table.successors_[feature.substr(0, space)].emplace_back(feature.substr(space + 1), df);
      }
    }
    for (auto& [word, list] : table.successors_) std::sort(list.begin(), list.end());
    return table;
  }

  std::size_t document_count() const { return documents_; }

  std::uint64_t document_frequency(std::string_view feature) const {
    auto it = df_.find(std::string(feature));
    return it == df_.end() ? 0 : it->second;
  }

  double idf_for_df(std::uint64_t df) const {
    return std::log((static_cast<double>(documents_) + 1.0) /
                    (static_cast<double>(df) + 1.0)) +
           1.0;
  }

  double idf(std::string_view feature) const { return idf_for_df(document_frequency(feature)); }

  // Words w2 such that the bigram "word w2" occurs in the reference corpus,
  // with its document frequency.
  std::span<const std::pair<std::string, std::uint64_t>> successors(const std::string& word) const {
    auto it = successors_.find(word);
    if (it == successors_.end()) return {};
    return it->second;
  }

 private:
  std::size_t documents_ = 0;
  std::unordered_map<std::string, std::uint64_t> df_;
  std::unordered_map<std::string, std::vector<std::pair<std::string, std::uint64_t>>> successors_;
};

// Sparse vector sorted by feature key. `norm` is the L2 norm of `weights`
// (1 after normalization, 0 for texts without words).
struct EmbeddingVector {
  std::vector<std::pair<std::string, double>> weights;
  double norm = 0.0;

  bool is_zero() const { return weights.empty() || norm == 0.0; }

  double computed_norm() const {
    double sq = 0.0;
    for (const auto& [f, w] : weights) sq += w * w;
    return std::sqrt(sq);
  }
};

inline EmbeddingVector make_normalized(std::map<std::string, double> raw) {
  EmbeddingVector vec;
  double sq = 0.0;
  for (const auto& [f, w] : raw) sq += w * w;
  if (sq == 0.0) return vec;
  const double norm = std::sqrt(sq);
  vec.weights.reserve(raw.size());
  for (auto& [f, w] : raw) vec.weights.emplace_back(f, w / norm);
  vec.norm = vec.computed_norm();
  return vec;
}

inline EmbeddingVector embed(std::string_view text, const IdfTable& idf) {
  std::map<std::string, double> tf;
  for (auto& feature : embedding_features(text)) tf[std::move(feature)] += 1.0;
  for (auto& [feature, weight] : tf) weight *= idf.idf(feature);
  return make_normalized(std::move(tf));
}

// Dot product of two normalized vectors clamped to [0, 1]; 0 when either is
// the zero vector.
inline double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  double dot = 0.0;
  auto ia = a.weights.begin();
  auto ib = b.weights.begin();
  while (ia != a.weights.end() && ib != b.weights.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  dot /= (a.norm * b.norm);
  return std::clamp(dot, 0.0, 1.0);
}

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual EmbeddingVector embed(std::string_view text) const = 0;

  double similarity(std::string_view a, std::string_view b) const {
    return cosine_similarity(embed(a), embed(b));
  }
};

class TfIdfEmbedder : public Embedder {
 public:
  explicit TfIdfEmbedder(IdfTable idf) : idf_(std::move(idf)) {}

  static TfIdfEmbedder from_documents(const std::vector<std::string>& documents) {
    return TfIdfEmbedder(IdfTable::build(documents));
  }

  EmbeddingVector embed(std::string_view text) const override {
    return lipogram::embed(text, idf_);
  }

  const IdfTable& idf() const { return idf_; }

 private:
  IdfTable idf_;
};

}  // namespace lipogram

#endif  // LIPOGRAM_EMBEDDING_HPP_
