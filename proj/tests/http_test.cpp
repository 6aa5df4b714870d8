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

#include <cmath>
#include <thread>

#include "httplib.h"
#include "lipogram/http.hpp"
#include "lipogram/passes.hpp"

namespace lipogram {
namespace {

// A local stand-in for both remote services.
class FakeServices : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/lt/v2/check", [this](const httplib::Request& req, httplib::Response& res) {
      last_text_ = req.get_param_value("text");
      last_language_ = req.get_param_value("language");
      res.set_content(lt_body_, "application/json");
    });
    server_.Post("/embed", [](const httplib::Request& req, httplib::Response& res) {
      const auto doc = nlohmann::json::parse(req.body);
      const std::string text = doc.at("texts").at(0);
      // Two dimensions: word count and count of the letter 'a'.
      double words = 0, as = 0;
      for (const auto& w : normalized_words(text)) {
        ++words;
        for (char ch : w) as += ch == 'a';
      }
      res.set_content(nlohmann::json{{"vectors", {{words, as, 0.0}}}}.dump(), "application/json");
    });
    server_.Post("/broken/embed", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("not json", "application/json");
    });
    server_.Post("/down/v2/check", [](const httplib::Request&, httplib::Response& res) {
      res.status = 503;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  std::string url(const std::string& path = "") const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::string lt_body_ = R"({"matches": []})";
  std::string last_text_;
  std::string last_language_;
};

TEST_F(FakeServices, LanguageToolRoundTrip) {
  lt_body_ =
      R"({"matches": [{"offset": 0, "length": 1, "message": "article",
                       "replacements": [{"value": "an"}, {"value": "the"}]},
                      {"offset": 8, "length": 3, "message": "style", "replacements": []}]})";
  LanguageToolClient client(url("/lt"));
  const auto matches = client.check("a apple pie");
  EXPECT_EQ(last_text_, "a apple pie");
  EXPECT_EQ(last_language_, "en-US");
  ASSERT_EQ(matches.size(), 2u);
  EXPECT_EQ(matches[0].offset, 0u);
  EXPECT_EQ(matches[0].length, 1u);
  EXPECT_EQ(matches[0].replacement.value(), "an");
  EXPECT_EQ(matches[0].message, "article");
  EXPECT_FALSE(matches[1].replacement.has_value());
  EXPECT_EQ(grammar_correct("a apple pie", ConstraintSet::parse("z"), client), "an apple pie");
}

TEST_F(FakeServices, LanguageToolOffsetsAreUtf16) {
  // "é" is one UTF-16 unit and two bytes; the emoji is two units and
  // four bytes.
  const std::string text = "\xC3\xA9 \xF0\x9F\x98\x80 a apple";
  lt_body_ = R"({"matches": [{"offset": 5, "length": 1, "replacements": [{"value": "an"}]}]})";
  LanguageToolClient client(url("/lt"));
  const auto matches = client.check(text);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].offset, 8u);
  EXPECT_EQ(text.substr(matches[0].offset, matches[0].length), "a");
}

TEST_F(FakeServices, LanguageToolFailuresAreProviderErrors) {
  LanguageToolClient down(url("/down"));
  EXPECT_THROW(down.check("x"), ProviderUnavailable);
  lt_body_ = "{";
  LanguageToolClient garbled(url("/lt"));
  EXPECT_THROW(garbled.check("x"), ProviderUnavailable);
}

TEST_F(FakeServices, EmbedderNormalizesRemoteVectors) {
  HttpEmbedder embedder(url());
  const EmbeddingVector v = embedder.embed("a banana");
  EXPECT_NEAR(v.norm, 1.0, 1e-12);
  // (2, 4) against (1, 0).
  EXPECT_NEAR(embedder.similarity("a banana", "oh"), 2.0 / std::sqrt(20.0), 1e-12);
  EXPECT_TRUE(embedder.embed("...").is_zero());
  HttpEmbedder broken(url("/broken"));
  EXPECT_THROW(broken.embed("words"), ProviderUnavailable);
}

TEST(Http, UnreachableEndpointRaisesProviderUnavailable) {
  // Port 9 on loopback is discard and virtually never listening.
  LanguageToolClient client("http://127.0.0.1:9");
  EXPECT_THROW(client.check("text"), ProviderUnavailable);
  HttpEmbedder embedder("http://127.0.0.1:9");
  EXPECT_THROW(embedder.embed("text"), ProviderUnavailable);
}

TEST(Http, EndpointParsing) {
  const Endpoint ep = parse_endpoint("http://localhost:8081/api/");
  EXPECT_EQ(ep.base, "http://localhost:8081");
  EXPECT_EQ(ep.prefix, "/api");
  EXPECT_EQ(parse_endpoint("http://h").prefix, "");
  EXPECT_THROW(parse_endpoint("https://h"), InputError);
  EXPECT_THROW(parse_endpoint("localhost:80"), InputError);
  EXPECT_THROW(parse_endpoint("http://"), InputError);
  EXPECT_NE(dynamic_cast<OfflineGrammarProvider*>(make_grammar_provider("").get()), nullptr);
}

TEST(Http, Utf16Offsets) {
  const std::string text = "a\xC3\xA9\xF0\x9F\x98\x80z";
  EXPECT_EQ(utf16_to_byte_offset(text, 0), 0u);
  EXPECT_EQ(utf16_to_byte_offset(text, 1), 1u);
  EXPECT_EQ(utf16_to_byte_offset(text, 2), 3u);
  EXPECT_EQ(utf16_to_byte_offset(text, 4), 7u);
  EXPECT_EQ(utf16_to_byte_offset(text, 99), text.size());
}

}  // namespace
}  // namespace lipogram
