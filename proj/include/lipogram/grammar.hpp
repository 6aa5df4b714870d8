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

#ifndef LIPOGRAM_GRAMMAR_HPP_
#define LIPOGRAM_GRAMMAR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lipogram {

// One reported problem. Offsets and lengths are in bytes of the checked text.
struct GrammarMatch {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::optional<std::string> replacement;
  std::string message;
};

// Source of grammar diagnostics. Implementations throw ProviderUnavailable
// when the backing service cannot answer.
class GrammarProvider {
 public:
  virtual ~GrammarProvider() = default;
  virtual std::vector<GrammarMatch> check(std::string_view text) = 0;
};

// Reports nothing. Selected when no endpoint is configured.
class OfflineGrammarProvider : public GrammarProvider {
 public:
  std::vector<GrammarMatch> check(std::string_view) override { return {}; }
};

}  // namespace lipogram

#endif  // LIPOGRAM_GRAMMAR_HPP_
