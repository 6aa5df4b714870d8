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

// Word-level n-gram model with stupid-backoff scoring.
//
// Each paragraph is one unit: its lowercased words are padded with
// (order - 1) leading <s> markers and one trailing </s>, and every n-gram of
// length 1..order inside the padded sequence is counted. Scores are
// unnormalized log values:
//
//   score(ctx, w) = log(c(ctx w) / c(ctx))              if c(ctx w) > 0
//                 = log(alpha) + score(ctx[1:], w)      otherwise
//   score((), w)  = log(c(w) / T)  if c(w) > 0,  log(1 / (T + V)) if not
//
// where T counts every predicted token (words and </s>, not <s>) and V is
// the vocabulary size including both boundary markers.
//
// File format (text):
//
//   NGRAM-LM v1 order=<k> alpha=<a>
//   \1-grams:
//   <count>\t<tok>
//   ...
//   <blank line>
//   \2-grams:
//   ...
//   <blank line>
//   \end\
//
// Lines within a section are sorted bytewise so saves are reproducible.

#ifndef LIPOGRAM_NGRAM_HPP_
#define LIPOGRAM_NGRAM_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lipogram/error.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";
inline constexpr int kMaxOrder = 5;
inline constexpr double kDefaultBackoff = 0.4;

class NGramModel {
 public:
  using TokenId = std::uint32_t;
  static constexpr TokenId kUnknown = std::numeric_limits<TokenId>::max();

  static NGramModel train(const std::vector<std::string>& paragraphs, int order,
                          double alpha = kDefaultBackoff) {
    if (order < 1 || order > kMaxOrder) {
      throw InputError("n-gram order must be in [1, " + std::to_string(kMaxOrder) +
                       "], got " + std::to_string(order));
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw InputError("backoff weight must be in (0, 1]");
    }
    NGramModel model(order, alpha);
    bool any_word = false;
    std::vector<TokenId> padded;
    for (const auto& paragraph : paragraphs) {
      const auto words = normalized_words(paragraph);
      if (words.empty()) continue;
      any_word = true;
      padded.assign(static_cast<std::size_t>(order - 1), model.bos_);
      for (const auto& w : words) padded.push_back(model.intern(w));
      padded.push_back(model.eos_);
      for (std::size_t end = 1; end <= padded.size(); ++end) {
        for (int n = 1; n <= order && static_cast<std::size_t>(n) <= end; ++n) {
          ++model.counts_[n - 1][Key::of(std::span(padded).subspan(end - n, n))];
        }
      }
    }
    if (!any_word) throw InputError("cannot train on a corpus without words");
    model.finalize();
    return model;
  }

  static NGramModel train(std::string_view corpus, int order,
                          double alpha = kDefaultBackoff) {
    return train(split_paragraphs(corpus), order, alpha);
  }

  int order() const { return order_; }
  double alpha() const { return alpha_; }
  std::size_t vocabulary_size() const { return words_.size(); }
  std::uint64_t total() const { return total_; }

  TokenId id(std::string_view word) const {
    auto it = ids_.find(std::string(word));
    return it == ids_.end() ? kUnknown : it->second;
  }
  const std::string& word(TokenId id) const { return words_.at(id); }
  TokenId bos() const { return bos_; }
  TokenId eos() const { return eos_; }

  bool in_vocabulary(std::string_view word) const { return id(word) != kUnknown; }

  std::uint64_t count_ids(std::span<const TokenId> ngram) const {
    if (ngram.empty() || ngram.size() > static_cast<std::size_t>(order_)) return 0;
    for (TokenId t : ngram) {
      if (t == kUnknown) return 0;
    }
    const auto& table = counts_[ngram.size() - 1];
    auto it = table.find(Key::of(ngram));
    return it == table.end() ? 0 : it->second;
  }

  std::uint64_t count(const std::vector<std::string>& ngram) const {
    return count_ids(to_ids(ngram));
  }

  // Only the last (order - 1) context tokens are used.
  double token_logscore_ids(std::span<const TokenId> context, TokenId token) const {
    const std::size_t usable =
        std::min(context.size(), static_cast<std::size_t>(order_ - 1));
    std::array<TokenId, kMaxOrder> buf{};
    double penalty = 0.0;
    const double log_alpha = std::log(alpha_);
    for (std::size_t k = usable; k >= 1; --k) {
      const auto ctx = context.subspan(context.size() - k, k);
      std::copy(ctx.begin(), ctx.end(), buf.begin());
      buf[k] = token;
      const std::uint64_t full = count_ids(std::span<const TokenId>(buf.data(), k + 1));
      if (full > 0) {
        const std::uint64_t denom = count_ids(ctx);
        return penalty + std::log(static_cast<double>(full) / static_cast<double>(denom));
      }
      penalty += log_alpha;
    }
    return penalty + unigram_logscore(token);
  }

  // Context-free level: log(c(w) / T), or the unseen floor (also for <s>).
  double unigram_logscore(TokenId token) const {
    const std::uint64_t uni = token == bos_ ? 0 : count_ids(std::span(&token, 1));
    if (uni > 0) return std::log(static_cast<double>(uni) / static_cast<double>(total_));
    return std::log(1.0 / static_cast<double>(total_ + words_.size()));
  }

  static constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();

  // Batched form of token_logscore_ids for a fixed context: writes the score
  // of slot_tokens[i] to out[i]. slot_of_token maps a model id to its slot
  // (kNoSlot if absent) and must cover every id. Results are bit-identical
  // to token_logscore_ids.
  void score_slots(std::span<const TokenId> context, std::span<const TokenId> slot_tokens,
                   std::span<const std::uint32_t> slot_of_token, std::span<double> out) const {
    const std::size_t usable =
        std::min(context.size(), static_cast<std::size_t>(order_ - 1));
    const double log_alpha = std::log(alpha_);
    std::array<double, kMaxOrder + 1> penalty{};
    for (std::size_t k = 1; k <= usable; ++k) penalty[k] = penalty[k - 1] + log_alpha;
    for (std::size_t i = 0; i < slot_tokens.size(); ++i) {
      out[i] = penalty[usable] + unigram_logscore(slot_tokens[i]);
    }
    for (std::size_t k = 1; k <= usable; ++k) {
      const auto ctx = context.subspan(context.size() - k, k);
      const std::uint64_t denom = count_ids(ctx);
      if (denom == 0) continue;
      auto it = successors_[k - 1].find(Key::of(ctx));
      if (it == successors_[k - 1].end()) continue;
      for (const auto& [token, full] : it->second) {
        const std::uint32_t slot = slot_of_token[token];
        if (slot == kNoSlot) continue;
        out[slot] = penalty[usable - k] +
                    std::log(static_cast<double>(full) / static_cast<double>(denom));
      }
    }
  }

  double token_logscore(const std::vector<std::string>& context,
                        std::string_view token) const {
    const auto ids = to_ids(context);
    return token_logscore_ids(ids, id(token));
  }

  // Sum of per-token scores, starting from (order - 1) <s> markers. No end
  // marker is added; pass "</s>" explicitly to score termination.
  double sequence_logscore(const std::vector<std::string>& tokens) const {
    std::vector<TokenId> context(static_cast<std::size_t>(order_ - 1), bos_);
    double sum = 0.0;
    for (const auto& token : tokens) {
      const TokenId t = id(token);
      sum += token_logscore_ids(context, t);
      context.push_back(t);
    }
    return sum;
  }

  // Word types (boundary markers excluded) by descending unigram count, ties
  // broken bytewise.
  std::vector<std::pair<std::string, std::uint64_t>> words_by_frequency() const {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    for (TokenId t = 0; t < words_.size(); ++t) {
      if (t == bos_ || t == eos_) continue;
      out.emplace_back(words_[t], count_ids(std::span(&t, 1)));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    return out;
  }

  void save(std::ostream& out) const {
    out << "NGRAM-LM v1 order=" << order_ << " alpha=" << format_double(alpha_) << "\n";
    for (int n = 1; n <= order_; ++n) {
      std::vector<std::pair<std::string, std::uint64_t>> lines;
      lines.reserve(counts_[n - 1].size());
      for (const auto& [key, count] : counts_[n - 1]) {
        std::string joined;
        for (int i = 0; i < key.n; ++i) {
          if (i > 0) joined.push_back(' ');
          joined += words_[key.ids[i]];
        }
        lines.emplace_back(std::move(joined), count);
      }
      std::sort(lines.begin(), lines.end());
      out << "\\" << n << "-grams:\n";
      for (const auto& [text, count] : lines) out << count << '\t' << text << '\n';
      out << '\n';
    }
    out << "\\end\\\n";
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write model '" + path + "'");
    save(out);
    if (!out) throw IoError("write failed for model '" + path + "'");
  }

  static NGramModel load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("model file is empty");
    int order = 0;
    double alpha = 0.0;
    parse_header(line, order, alpha);
    NGramModel model(order, alpha);
    std::size_t line_no = 1;
    for (int n = 1; n <= order; ++n) {
      ++line_no;
      if (!std::getline(in, line)) {
        throw FormatError("model truncated before the " + std::to_string(n) + "-gram section");
      }
      const std::string expected = "\\" + std::to_string(n) + "-grams:";
      if (line != expected) {
        throw FormatError("line " + std::to_string(line_no) + ": expected section header '" +
                          expected + "', got '" + line + "'");
      }
      bool closed = false;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
          closed = true;
          break;
        }
        model.parse_count_line(line, n, line_no);
      }
      if (!closed) {
        throw FormatError("model truncated inside the " + std::to_string(n) + "-gram section");
      }
    }
    if (!std::getline(in, line) || line != "\\end\\") {
      throw FormatError("model truncated: missing \\end\\ marker");
    }
    model.finalize();
    return model;
  }

  static NGramModel load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model '" + path + "'");
    return load(in);
  }

 private:
  struct Key {
    std::array<TokenId, kMaxOrder> ids{};
    std::uint8_t n = 0;

    static Key of(std::span<const TokenId> tokens) {
      Key key;
      key.n = static_cast<std::uint8_t>(tokens.size());
      std::copy(tokens.begin(), tokens.end(), key.ids.begin());
      return key;
    }
    friend bool operator==(const Key&, const Key&) = default;
  };

  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      std::uint64_t h = 0x9E3779B97F4A7C15ull ^ key.n;
      for (int i = 0; i < key.n; ++i) {
        h ^= key.ids[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

  NGramModel(int order, double alpha) : order_(order), alpha_(alpha), counts_(order) {
    bos_ = intern(std::string(kSentenceStart));
    eos_ = intern(std::string(kSentenceEnd));
  }

  TokenId intern(const std::string& word) {
    auto [it, inserted] = ids_.try_emplace(word, static_cast<TokenId>(words_.size()));
    if (inserted) words_.push_back(word);
    return it->second;
  }

  std::vector<TokenId> to_ids(const std::vector<std::string>& tokens) const {
    std::vector<TokenId> ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) ids.push_back(id(t));
    return ids;
  }

  void finalize() {
    total_ = 0;
    for (const auto& [key, count] : counts_[0]) {
      if (key.ids[0] != bos_) total_ += count;
    }
    successors_.assign(static_cast<std::size_t>(order_ > 1 ? order_ - 1 : 0), {});
    for (int n = 2; n <= order_; ++n) {
      for (const auto& [key, count] : counts_[n - 1]) {
        Key prefix = key;
        prefix.n = static_cast<std::uint8_t>(n - 1);
        prefix.ids[n - 1] = 0;
        successors_[n - 2][prefix].emplace_back(key.ids[n - 1], count);
      }
    }
  }

  static std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
  }

  static void parse_header(const std::string& line, int& order, double& alpha) {
    constexpr std::string_view kMagic = "NGRAM-LM ";
    if (line.rfind(kMagic, 0) != 0) throw FormatError("not an n-gram model file (bad magic)");
    std::string_view rest = std::string_view(line).substr(kMagic.size());
    if (rest.rfind("v1 ", 0) != 0) {
      throw FormatError("unsupported model version in header '" + line + "'");
    }
    rest.remove_prefix(3);
    constexpr std::string_view kOrder = "order=";
    constexpr std::string_view kAlpha = " alpha=";
    const std::size_t alpha_pos = rest.find(kAlpha);
    if (rest.rfind(kOrder, 0) != 0 || alpha_pos == std::string_view::npos) {
      throw FormatError("malformed model header '" + line + "'");
    }
    const std::string_view order_text = rest.substr(kOrder.size(), alpha_pos - kOrder.size());
    const std::string_view alpha_text = rest.substr(alpha_pos + kAlpha.size());
    auto r1 = std::from_chars(order_text.data(), order_text.data() + order_text.size(), order);
    auto r2 = std::from_chars(alpha_text.data(), alpha_text.data() + alpha_text.size(), alpha);
    if (r1.ec != std::errc() || r1.ptr != order_text.data() + order_text.size() ||
        r2.ec != std::errc() || r2.ptr != alpha_text.data() + alpha_text.size()) {
      throw FormatError("malformed model header '" + line + "'");
    }
    if (order < 1 || order > kMaxOrder || !(alpha > 0.0 && alpha <= 1.0)) {
      throw FormatError("model header out of range '" + line + "'");
    }
  }

  void parse_count_line(const std::string& line, int n, std::size_t line_no) {
    const std::size_t tab = line.find('\t');
    auto fail = [&] {
      throw FormatError("line " + std::to_string(line_no) + ": malformed " +
                        std::to_string(n) + "-gram entry");
    };
    if (tab == std::string::npos) fail();
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, count);
    if (ec != std::errc() || ptr != line.data() + tab || count == 0) fail();
    std::array<TokenId, kMaxOrder> ids{};
    int got = 0;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (!rest.empty()) {
      const std::size_t sp = rest.find(' ');
      const std::string_view tok = rest.substr(0, sp);
      if (tok.empty() || got == n) fail();
      ids[got++] = intern(std::string(tok));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
    if (got != n) fail();
    counts_[n - 1][Key::of(std::span<const TokenId>(ids.data(), n))] = count;
  }

  int order_;
  double alpha_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::unordered_map<Key, std::uint64_t, KeyHash>> counts_;
  // successors_[k - 1][ctx] lists (token, c(ctx token)) for k-token contexts.
  std::vector<std::unordered_map<Key, std::vector<std::pair<TokenId, std::uint64_t>>, KeyHash>>
      successors_;
  TokenId bos_ = 0;
  TokenId eos_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace lipogram

#endif  // LIPOGRAM_NGRAM_HPP_
