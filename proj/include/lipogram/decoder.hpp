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

// Constrained beam-search paraphraser.
//
// The decoder only ever sees an allow-list of constraint-free words, so a
// forbidden letter can never be emitted. Each partial hypothesis is scored
//
//   combined = lambda_lm * lm + lambda_sim * sim
//
// where lm is the n-gram log score of the words so far (plus the end marker
// once finished) and sim is the TF-IDF cosine between the partial output and
// the source paragraph, updated incrementally per expansion.

#ifndef LIPOGRAM_DECODER_HPP_
#define LIPOGRAM_DECODER_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/lexicon.hpp"
#include "lipogram/ngram.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

enum class DecodeMode { kDeterministic, kSampled };

struct DecoderConfig {
  int beam_width = 20;
  int candidates_k = 10;
  int no_repeat_ngram = 3;
  double min_ratio = 0.5;
  double max_ratio = 1.5;
  double temperature = 0.90;  // sampled mode only
  double lambda_lm = 1.0;
  double lambda_sim = 5.0;
  int candidate_vocab_size = 500;
  DecodeMode mode = DecodeMode::kDeterministic;
  std::uint64_t seed = 0;

  // Three candidates instead of ten.
  static DecoderConfig small_k() {
    DecoderConfig cfg;
    cfg.candidates_k = 3;
    return cfg;
  }

  void validate() const {
    auto fail = [](const std::string& why) { throw InputError("decoder config: " + why); };
    if (candidates_k < 1) fail("candidates_k must be >= 1");
    if (beam_width < candidates_k) fail("beam_width must be >= candidates_k");
    if (!(min_ratio > 0.0) || !(min_ratio <= max_ratio)) {
      fail("need 0 < min_ratio <= max_ratio");
    }
    if (no_repeat_ngram < 2) fail("no_repeat_ngram must be >= 2");
    if (!(temperature > 0.0)) fail("temperature must be > 0");
    if (!(lambda_lm >= 0.0) || !(lambda_sim >= 0.0)) fail("lambdas must be >= 0");
    if (candidate_vocab_size < 0) fail("candidate_vocab_size must be >= 0");
  }

  // Applies one key=value setting. Returns false for keys this struct does
  // not own; throws FormatError for unparseable values.
  bool set(std::string_view key, std::string_view value) {
    auto as_int = [&](int& out) {
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
      if (ec != std::errc() || p != value.data() + value.size()) bad(key, value);
    };
    auto as_double = [&](double& out) {
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
      if (ec != std::errc() || p != value.data() + value.size()) bad(key, value);
    };
    if (key == "beam_width") {
      as_int(beam_width);
    } else if (key == "candidates_k") {
      as_int(candidates_k);
    } else if (key == "no_repeat_ngram") {
      as_int(no_repeat_ngram);
    } else if (key == "min_ratio") {
      as_double(min_ratio);
    } else if (key == "max_ratio") {
      as_double(max_ratio);
    } else if (key == "temperature") {
      as_double(temperature);
    } else if (key == "lambda_lm") {
      as_double(lambda_lm);
    } else if (key == "lambda_sim") {
      as_double(lambda_sim);
    } else if (key == "candidate_vocab_size") {
      as_int(candidate_vocab_size);
    } else if (key == "mode") {
      if (value == "deterministic") {
        mode = DecodeMode::kDeterministic;
      } else if (value == "sampled") {
        mode = DecodeMode::kSampled;
      } else {
        bad(key, value);
      }
    } else if (key == "seed") {
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc() || p != value.data() + value.size()) bad(key, value);
    } else {
      return false;
    }
    return true;
  }

  nlohmann::json to_json() const {
    return {{"beam_width", beam_width},
            {"candidates_k", candidates_k},
            {"no_repeat_ngram", no_repeat_ngram},
            {"min_ratio", min_ratio},
            {"max_ratio", max_ratio},
            {"temperature", temperature},
            {"lambda_lm", lambda_lm},
            {"lambda_sim", lambda_sim},
            {"candidate_vocab_size", candidate_vocab_size},
            {"mode", mode == DecodeMode::kDeterministic ? "deterministic" : "sampled"},
            {"seed", seed}};
  }

 private:
  [[noreturn]] static void bad(std::string_view key, std::string_view value) {
    throw FormatError("bad value '" + std::string(value) + "' for key '" + std::string(key) + "'");
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space_byte(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space_byte(s.back())) s.remove_suffix(1);
  return s;
}

// Calls `on_pair(key, value, line_no)` for every key=value line; blank lines
// and '#' comments are skipped.
template <typename Fn>
void for_each_setting(std::istream& in, Fn&& on_pair) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    on_pair(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line_no);
  }
}

}  // namespace detail

// Reads a decoder-only key=value file. Unknown keys are errors.
inline DecoderConfig parse_decoder_config(std::istream& in) {
  DecoderConfig cfg;
  detail::for_each_setting(in, [&](std::string_view key, std::string_view value, std::size_t n) {
    if (!cfg.set(key, value)) {
      throw FormatError("config line " + std::to_string(n) + ": unknown key '" +
                        std::string(key) + "'");
    }
  });
  cfg.validate();
  return cfg;
}

struct Hypothesis {
  std::vector<std::string> tokens;
  double lm_score = 0.0;
  double sim_score = 0.0;
  double combined = 0.0;
};

struct LengthBounds {
  std::size_t min = 0;
  std::size_t max = 0;
};

inline LengthBounds length_bounds(std::size_t source_words, const DecoderConfig& cfg) {
  const double s = static_cast<double>(source_words);
  constexpr double kSlack = 1e-9;
  const double lo = std::ceil(cfg.min_ratio * s - kSlack);
  const double hi = std::floor(cfg.max_ratio * s + kSlack);
  return {static_cast<std::size_t>(std::max(lo, 1.0)),
          static_cast<std::size_t>(std::max(hi, 0.0))};
}

// Allow-list for one paragraph: constraint-free source words, then
// constraint-free synonyms of source words, then the `limit` most frequent
// constraint-free model words. Deduplicated, first occurrence wins. Throws
// EmptyVocabulary when nothing survives.
inline std::vector<std::string> build_candidate_vocab(std::string_view source,
                                                      const ConstraintSet& constraint,
                                                      const Lexicon& lexicon,
                                                      const NGramModel& model, int limit) {
  std::vector<std::string> vocab;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& w) {
    if (!violates(w, constraint) && seen.insert(w).second) vocab.push_back(w);
  };
  const auto words = normalized_words(source);
  for (const auto& w : words) add(w);
  for (const auto& w : words) {
    for (const auto& syn : constraint_free_synonyms(w, constraint, lexicon)) {
      // Multi-token synonyms ("well-to-do", "jr.") cannot be a single step.
      const auto toks = tokenize(syn);
      if (toks.size() == 1 && toks.front().kind == TokenKind::kWord) add(normalize_word(syn));
    }
  }
  int taken = 0;
  for (const auto& [w, count] : model.words_by_frequency()) {
    if (taken >= limit) break;
    if (violates(w, constraint)) continue;
    ++taken;
    add(w);
  }
  if (vocab.empty()) {
    throw EmptyVocabulary("no constraint-free word available for constraint '" +
                          constraint.label() + "'");
  }
  return vocab;
}

namespace detail {

// Incremental scorer shared by every hypothesis of one decode.
class SearchSpace {
 public:
  SearchSpace(std::vector<std::string> vocab, std::string_view source, const NGramModel& model,
              const IdfTable& idf)
      : vocab_(std::move(vocab)), model_(model), idf_(idf) {
    const std::size_t v = vocab_.size();
    lm_ids_.resize(v);
    uni_idf_.resize(v);
    uni_src_.assign(v, 0.0);
    slot_of_token_.assign(model.vocabulary_size(), NGramModel::kNoSlot);
    for (std::uint32_t i = 0; i < v; ++i) {
      index_.emplace(vocab_[i], i);
      lm_ids_[i] = model.id(vocab_[i]);
      if (lm_ids_[i] != NGramModel::kUnknown) slot_of_token_[lm_ids_[i]] = i;
      uni_idf_[i] = idf.idf(vocab_[i]);
    }
    unseen_bigram_idf_ = idf.idf_for_df(0);
    bigram_cache_.resize(v);
    bigram_ready_.assign(v, false);
    const EmbeddingVector src = embed(source, idf);
    for (const auto& [feature, weight] : src.weights) {
      const std::size_t space = feature.find(' ');
      if (space == std::string::npos) {
        auto it = index_.find(feature);
        if (it != index_.end()) uni_src_[it->second] = weight;
        continue;
      }
      auto a = index_.find(feature.substr(0, space));
      auto b = index_.find(feature.substr(space + 1));
      if (a != index_.end() && b != index_.end()) {
        src_bigrams_[a->second].emplace_back(b->second, weight);
      }
    }
  }

  std::size_t size() const { return vocab_.size(); }
  const std::string& word(std::uint32_t i) const { return vocab_[i]; }
  NGramModel::TokenId lm_id(std::uint32_t i) const { return lm_ids_[i]; }

  // LM score of every vocabulary word after `context`.
  void score_all(std::span<const NGramModel::TokenId> context, std::vector<double>& out) const {
    out.resize(vocab_.size());
    model_.score_slots(context, lm_ids_, slot_of_token_, out);
  }
  double uni_idf(std::uint32_t i) const { return uni_idf_[i]; }
  double uni_src(std::uint32_t i) const { return uni_src_[i]; }
  double unseen_bigram_idf() const { return unseen_bigram_idf_; }

  struct BigramInfo {
    std::uint32_t next;
    double idf;
    double src;
  };

  // Bigrams starting at `first` whose idf or source weight differs from the
  // unseen default.
  const std::vector<BigramInfo>& bigrams_from(std::uint32_t first) {
    if (bigram_ready_[first]) return bigram_cache_[first];
    std::map<std::uint32_t, BigramInfo> merged;
    for (const auto& [next, df] : idf_.successors(vocab_[first])) {
      auto it = index_.find(next);
      if (it == index_.end()) continue;
      merged[it->second] = {it->second, idf_.idf_for_df(df), 0.0};
    }
    auto src = src_bigrams_.find(first);
    if (src != src_bigrams_.end()) {
      for (const auto& [next, weight] : src->second) {
        auto [it, inserted] = merged.try_emplace(next, BigramInfo{next, unseen_bigram_idf_, 0.0});
        it->second.src = weight;
      }
    }
    auto& out = bigram_cache_[first];
    for (const auto& [next, info] : merged) out.push_back(info);
    bigram_ready_[first] = true;
    return out;
  }

  const NGramModel& model() const { return model_; }

 private:
  std::vector<std::string> vocab_;
  const NGramModel& model_;
  const IdfTable& idf_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<NGramModel::TokenId> lm_ids_;
  std::vector<std::uint32_t> slot_of_token_;
  std::vector<double> uni_idf_;
  std::vector<double> uni_src_;
  double unseen_bigram_idf_ = 1.0;
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, double>>> src_bigrams_;
  std::vector<std::vector<BigramInfo>> bigram_cache_;
  std::vector<bool> bigram_ready_;
};

struct Partial {
  std::vector<std::uint32_t> words;
  double lm = 0.0;
  double dot = 0.0;  // sum over features of tf * idf * source weight
  double sq = 0.0;   // sum over features of (tf * idf)^2
  double sim = 0.0;
  double combined = 0.0;
};

struct Expansion {
  double key;
  double combined;
  double lm;
  double dot;
  double sq;
  double sim;
  std::uint32_t parent;
  std::uint32_t word;
};

inline double partial_sim(double dot, double sq) {
  if (sq <= 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(sq), 0.0, 1.0);
}

// Uniform draw in (0, 1) from the top 53 bits of a 64-bit engine.
inline double open_uniform(std::mt19937_64& rng) {
  const std::uint64_t bits = rng() >> 11;
  return (static_cast<double>(bits) + 0.5) * (1.0 / 9007199254740992.0);
}

// One beam run. In sampled mode `rng` is non-null and survivors are drawn
// without replacement by Gumbel-perturbed keys; otherwise the top scores
// survive, ties broken by parent then word index.
//
// Every token log score is <= 0, so a partial can never finish above
// lambda_lm * lm + lambda_sim. The search stops once no active partial can
// beat the `wanted`-th best finished hypothesis; this never changes the
// returned top `wanted`.
inline std::vector<Partial> run_beam(SearchSpace& space, const DecoderConfig& cfg,
                                     LengthBounds bounds, std::mt19937_64* rng,
                                     std::size_t wanted) {
  const NGramModel& model = space.model();
  const std::size_t v = space.size();
  const std::size_t ctx_len = static_cast<std::size_t>(model.order() - 1);
  const std::size_t n = static_cast<std::size_t>(cfg.no_repeat_ngram);

  std::vector<Partial> active(1);
  std::vector<Partial> finished;
  std::vector<std::uint32_t> uni_count(v, 0);
  std::vector<std::uint32_t> bi_count(v, 0);
  std::vector<char> banned(v, 0);
  std::vector<double> bi_idf(v, space.unseen_bigram_idf());
  std::vector<double> bi_src(v, 0.0);
  std::vector<NGramModel::TokenId> context;
  std::vector<Expansion> expansions;
  std::vector<double> lm_next;

  auto finish_score = [&](Partial p) {
    p.lm += model.token_logscore_ids(context, model.eos());
    p.combined = cfg.lambda_lm * p.lm + cfg.lambda_sim * p.sim;
    finished.push_back(std::move(p));
  };

  while (!active.empty()) {
    expansions.clear();
    for (std::uint32_t a = 0; a < active.size(); ++a) {
      const Partial& p = active[a];
      const std::size_t len = p.words.size();

      context.assign(ctx_len, model.bos());
      for (std::uint32_t w : p.words) context.push_back(space.lm_id(w));
      if (context.size() > ctx_len) {
        context.erase(context.begin(), context.end() - static_cast<std::ptrdiff_t>(ctx_len));
      }

      if (len >= bounds.min) finish_score(p);
      if (len >= bounds.max) continue;

      for (std::uint32_t w : p.words) ++uni_count[w];
      const bool has_last = len > 0;
      const std::uint32_t last = has_last ? p.words.back() : 0;
      const std::vector<SearchSpace::BigramInfo>* bigrams = nullptr;
      if (has_last) {
        for (std::size_t i = 0; i + 1 < len; ++i) {
          if (p.words[i] == last) ++bi_count[p.words[i + 1]];
        }
        bigrams = &space.bigrams_from(last);
        for (const auto& b : *bigrams) {
          bi_idf[b.next] = b.idf;
          bi_src[b.next] = b.src;
        }
      }
      // An n-gram may not repeat: ban every word that would complete an
      // earlier occurrence of the current (n-1)-word suffix.
      if (len >= n - 1 && len >= n) {
        const auto suffix = std::span(p.words).subspan(len - (n - 1));
        for (std::size_t s = 0; s + n - 1 < len; ++s) {
          if (std::equal(suffix.begin(), suffix.end(), p.words.begin() + static_cast<std::ptrdiff_t>(s))) {
            banned[p.words[s + n - 1]] = 1;
          }
        }
      }

      space.score_all(context, lm_next);
      for (std::uint32_t w = 0; w < v; ++w) {
        if (banned[w]) continue;
        const double lm = p.lm + lm_next[w];
        const double uidf = space.uni_idf(w);
        double dot = p.dot + space.uni_src(w) * uidf;
        double sq = p.sq + uidf * uidf * (2.0 * uni_count[w] + 1.0);
        if (has_last) {
          dot += bi_src[w] * bi_idf[w];
          sq += bi_idf[w] * bi_idf[w] * (2.0 * bi_count[w] + 1.0);
        }
        const double sim = partial_sim(dot, sq);
        const double combined = cfg.lambda_lm * lm + cfg.lambda_sim * sim;
        expansions.push_back({combined, combined, lm, dot, sq, sim, a, w});
      }

      for (std::uint32_t w : p.words) uni_count[w] = 0;
      if (has_last) {
        for (std::size_t i = 0; i + 1 < len; ++i) bi_count[p.words[i + 1]] = 0;
        for (const auto& b : *bigrams) {
          bi_idf[b.next] = space.unseen_bigram_idf();
          bi_src[b.next] = 0.0;
        }
      }
      std::fill(banned.begin(), banned.end(), 0);
    }

    if (rng != nullptr) {
      for (auto& e : expansions) {
        const double u = open_uniform(*rng);
        e.key = e.combined / cfg.temperature - std::log(-std::log(u));
      }
    }
    const std::size_t keep = std::min(expansions.size(), static_cast<std::size_t>(cfg.beam_width));
    std::partial_sort(expansions.begin(), expansions.begin() + static_cast<std::ptrdiff_t>(keep),
                      expansions.end(), [](const Expansion& x, const Expansion& y) {
                        if (x.key != y.key) return x.key > y.key;
                        if (x.parent != y.parent) return x.parent < y.parent;
                        return x.word < y.word;
                      });
    std::vector<Partial> next;
    next.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
      const Expansion& e = expansions[i];
      Partial child;
      child.words = active[e.parent].words;
      child.words.push_back(e.word);
      child.lm = e.lm;
      child.dot = e.dot;
      child.sq = e.sq;
      child.sim = e.sim;
      child.combined = e.combined;
      next.push_back(std::move(child));
    }
    active = std::move(next);

    if (finished.size() >= wanted && !active.empty()) {
      std::vector<double> scores;
      scores.reserve(finished.size());
      for (const auto& f : finished) scores.push_back(f.combined);
      std::nth_element(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(wanted - 1),
                       scores.end(), std::greater<>());
      const double threshold = scores[wanted - 1];
      double reachable = -std::numeric_limits<double>::infinity();
      for (const auto& p : active) {
        reachable = std::max(reachable, cfg.lambda_lm * p.lm + cfg.lambda_sim);
      }
      if (reachable <= threshold) break;
    }
  }

  std::stable_sort(finished.begin(), finished.end(),
                   [](const Partial& x, const Partial& y) { return x.combined > y.combined; });
  return finished;
}

inline Hypothesis to_hypothesis(const SearchSpace& space, const Partial& p) {
  Hypothesis h;
  for (std::uint32_t w : p.words) h.tokens.push_back(space.word(w));
  h.lm_score = p.lm;
  h.sim_score = p.sim;
  h.combined = p.combined;
  return h;
}

}  // namespace detail

// Decodes one paragraph. Returns at most candidates_k hypotheses sorted by
// combined score, best first. Deterministic mode returns the top finished
// hypotheses of a single run; sampled mode returns the best hypothesis of
// each of candidates_k runs seeded seed, seed+1, ...
//
// In-search similarity always uses `scorer`; a remote embedder can still be
// used afterwards for multiselection.
inline std::vector<Hypothesis> beam_search(std::string_view source, const ConstraintSet& constraint,
                                           const DecoderConfig& cfg, const NGramModel& model,
                                           const Lexicon& lexicon, const TfIdfEmbedder& scorer) {
  cfg.validate();
  const std::size_t source_words = normalized_words(source).size();
  if (source_words == 0) throw InputError("beam search needs a source with at least one word");
  const LengthBounds bounds = length_bounds(source_words, cfg);
  if (bounds.min > bounds.max) {
    throw DecodeFailure("no legal output length for a " + std::to_string(source_words) +
                        "-word source");
  }
  detail::SearchSpace space(
      build_candidate_vocab(source, constraint, lexicon, model, cfg.candidate_vocab_size), source,
      model, scorer.idf());

  std::vector<Hypothesis> out;
  if (cfg.mode == DecodeMode::kDeterministic) {
    const auto finished = detail::run_beam(
        space, cfg, bounds, nullptr, static_cast<std::size_t>(cfg.candidates_k));
    for (std::size_t i = 0; i < finished.size() && out.size() < static_cast<std::size_t>(cfg.candidates_k); ++i) {
      out.push_back(detail::to_hypothesis(space, finished[i]));
    }
  } else {
    for (int run = 0; run < cfg.candidates_k; ++run) {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(run));
      const auto finished = detail::run_beam(space, cfg, bounds, &rng, 1);
      if (!finished.empty()) out.push_back(detail::to_hypothesis(space, finished.front()));
    }
    std::stable_sort(out.begin(), out.end(), [](const Hypothesis& x, const Hypothesis& y) {
      return x.combined > y.combined;
    });
  }
  if (out.empty()) throw DecodeFailure("every hypothesis was pruned before reaching a legal length");
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Index of the candidate most similar to the source; the earliest wins ties.
inline std::size_t multiselect_index(const std::vector<Hypothesis>& candidates,
                                     std::string_view source, const Embedder& embedder) {
  if (candidates.empty()) throw InputError("multiselect needs at least one candidate");
  const EmbeddingVector src = embedder.embed(source);
  std::size_t best = 0;
  double best_sim = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double sim = cosine_similarity(embedder.embed(join_tokens(candidates[i].tokens)), src);
    if (sim > best_sim) {
      best_sim = sim;
      best = i;
    }
  }
  return best;
}

inline const Hypothesis& multiselect(const std::vector<Hypothesis>& candidates,
                                     std::string_view source, const Embedder& embedder) {
  return candidates[multiselect_index(candidates, source, embedder)];
}

// Turns lowercase decoder words back into prose: each word takes the most
// common non-sentence-initial surface form it has in the source, "i" is
// capitalized, the first letter is upper-cased and a period is appended.
inline std::string render_hypothesis(const std::vector<std::string>& tokens,
                                     std::string_view source) {
  if (tokens.empty()) return {};
  std::unordered_map<std::string, std::map<std::string, int>> forms;
  bool sentence_start = true;
  for (const auto& token : tokenize(source)) {
    if (token.kind == TokenKind::kWord) {
      if (!sentence_start) ++forms[normalize_word(token.text)][token.text];
      sentence_start = false;
    } else if (token.kind == TokenKind::kPunct &&
               (token.text == "." || token.text == "!" || token.text == "?")) {
      sentence_start = true;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string word = tokens[i];
    auto it = forms.find(word);
    if (it != forms.end()) {
      int best = 0;
      for (const auto& [surface, count] : it->second) {
        if (count > best) {
          best = count;
          word = surface;
        }
      }
    }
    if (word == "i" || word.rfind("i'", 0) == 0) word[0] = 'I';
    if (i == 0) {
      word = transfer_case("X", std::move(word));
    } else {
      out.push_back(' ');
    }
    out += word;
  }
  out.push_back('.');
  return out;
}

}  // namespace lipogram

#endif  // LIPOGRAM_DECODER_HPP_
