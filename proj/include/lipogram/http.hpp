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

// HTTP clients for the optional remote providers. Kept out of the other
// headers so that only programs talking to a network service pull in
// cpp-httplib.

#ifndef LIPOGRAM_HTTP_HPP_
#define LIPOGRAM_HTTP_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/grammar.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

struct Endpoint {
  std::string base;    // scheme://host[:port]
  std::string prefix;  // path prefix without trailing '/'
};

inline Endpoint parse_endpoint(std::string_view url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string_view::npos || url.substr(0, scheme) != "http") {
    throw InputError("endpoint must be an http:// URL: '" + std::string(url) + "'");
  }
  const std::size_t path = url.find('/', scheme + 3);
  Endpoint ep;
  ep.base = std::string(url.substr(0, path));
  if (path != std::string_view::npos) ep.prefix = std::string(url.substr(path));
  while (!ep.prefix.empty() && ep.prefix.back() == '/') ep.prefix.pop_back();
  if (ep.base.size() == scheme + 3) throw InputError("endpoint has no host: '" + std::string(url) + "'");
  return ep;
}

// Converts a UTF-16 code-unit offset into a byte offset of `text`. Offsets
// past the end clamp to text.size().
inline std::size_t utf16_to_byte_offset(std::string_view text, std::size_t units) {
  std::size_t pos = 0;
  std::size_t seen = 0;
  while (pos < text.size() && seen < units) {
    const std::size_t len = utf8_sequence_length(text, pos);
    seen += len == 4 ? 2 : 1;
    pos += len;
  }
  return pos;
}

namespace detail {

// A fresh client per request keeps the providers safe to share across
// threads.
inline httplib::Result post(const Endpoint& ep, const std::string& path, const std::string& body,
                            const std::string& content_type) {
  httplib::Client client(ep.base);
  client.set_connection_timeout(5);
  client.set_read_timeout(60);
  return client.Post(ep.prefix + path, body, content_type);
}

inline std::string describe(const httplib::Result& result) {
  if (!result) return "request failed: " + httplib::to_string(result.error());
  return "HTTP status " + std::to_string(result->status);
}

}  // namespace detail

// LanguageTool v2 client: POST {endpoint}/v2/check with text and
// language=en-US.
class LanguageToolClient : public GrammarProvider {
 public:
  explicit LanguageToolClient(std::string_view endpoint, std::string language = "en-US")
      : endpoint_(parse_endpoint(endpoint)), language_(std::move(language)) {}

  std::vector<GrammarMatch> check(std::string_view text) override {
    httplib::Client client(endpoint_.base);
    client.set_connection_timeout(5);
    client.set_read_timeout(60);
    const httplib::Params form = {{"text", std::string(text)}, {"language", language_}};
    const auto result = client.Post(endpoint_.prefix + "/v2/check", form);
    if (!result || result->status != 200) {
      throw ProviderUnavailable("grammar service: " + detail::describe(result));
    }
    return parse_response(text, result->body);
  }

  static std::vector<GrammarMatch> parse_response(std::string_view text, const std::string& body) {
    std::vector<GrammarMatch> out;
    try {
      const auto doc = nlohmann::json::parse(body);
      for (const auto& m : doc.at("matches")) {
        const auto offset16 = m.at("offset").get<std::size_t>();
        const auto length16 = m.at("length").get<std::size_t>();
        GrammarMatch match;
        match.offset = utf16_to_byte_offset(text, offset16);
        match.length = utf16_to_byte_offset(text, offset16 + length16) - match.offset;
        if (m.contains("message") && m["message"].is_string()) match.message = m["message"];
        if (m.contains("replacements") && m["replacements"].is_array() &&
            !m["replacements"].empty()) {
          match.replacement = m["replacements"][0].at("value").get<std::string>();
        }
        out.push_back(std::move(match));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ProviderUnavailable(std::string("grammar service returned malformed JSON: ") + e.what());
    }
    return out;
  }

 private:
  Endpoint endpoint_;
  std::string language_;
};

// Dense remote embeddings: POST {endpoint}/embed with {"texts": [...]},
// expecting {"vectors": [[...]]}. Dimension i becomes feature "d<i>".
class HttpEmbedder : public Embedder {
 public:
  explicit HttpEmbedder(std::string_view endpoint) : endpoint_(parse_endpoint(endpoint)) {}

  EmbeddingVector embed(std::string_view text) const override {
    if (normalized_words(text).empty()) return {};
    nlohmann::json request = nlohmann::json::object();
    request["texts"] = nlohmann::json::array({std::string(text)});
    const auto result = detail::post(endpoint_, "/embed", request.dump(), "application/json");
    if (!result || result->status != 200) {
      throw ProviderUnavailable("embedding service: " + detail::describe(result));
    }
    std::map<std::string, double> raw;
    try {
      const auto doc = nlohmann::json::parse(result->body);
      const auto& vec = doc.at("vectors").at(0);
      for (std::size_t i = 0; i < vec.size(); ++i) {
        const double v = vec[i].get<double>();
        if (v != 0.0) raw["d" + std::to_string(i)] = v;
      }
    } catch (const nlohmann::json::exception& e) {
      throw ProviderUnavailable(std::string("embedding service returned malformed JSON: ") +
                                e.what());
    }
    return make_normalized(std::move(raw));
  }

 private:
  Endpoint endpoint_;
};

// Offline stub for an empty endpoint, the LanguageTool client otherwise.
inline std::unique_ptr<GrammarProvider> make_grammar_provider(std::string_view endpoint) {
  if (endpoint.empty()) return std::make_unique<OfflineGrammarProvider>();
  return std::make_unique<LanguageToolClient>(endpoint);
}

}  // namespace lipogram

#endif  // LIPOGRAM_HTTP_HPP_
