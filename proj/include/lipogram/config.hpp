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

#ifndef LIPOGRAM_CONFIG_HPP_
#define LIPOGRAM_CONFIG_HPP_

#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lipogram/decoder.hpp"
#include "lipogram/error.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

// Contents of a --config file: decoder keys plus
//   grammar.endpoint = http://host:port   (empty selects the offline stub)
//   embed.endpoint   = http://host:port   (empty selects TF-IDF)
//   sweep.extra      = et, st, aeiouy     (comma-separated letter groups)
struct FileConfig {
  DecoderConfig decoder;
  std::string grammar_endpoint;
  std::string embed_endpoint;
  std::vector<ConstraintSet> sweep_extra;
};

inline std::vector<ConstraintSet> parse_constraint_list(std::string_view value) {
  std::vector<ConstraintSet> sets;
  while (!value.empty()) {
    const std::size_t comma = value.find(',');
    const std::string_view item = detail::trim(value.substr(0, comma));
    if (item.empty()) throw FormatError("empty letter group in list");
    sets.push_back(ConstraintSet::parse(item));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return sets;
}

inline FileConfig parse_config(std::istream& in) {
  FileConfig cfg;
  detail::for_each_setting(in, [&](std::string_view key, std::string_view value, std::size_t n) {
    if (key == "grammar.endpoint") {
      cfg.grammar_endpoint = std::string(value);
    } else if (key == "embed.endpoint") {
      cfg.embed_endpoint = std::string(value);
    } else if (key == "sweep.extra") {
      try {
        cfg.sweep_extra = parse_constraint_list(value);
      } catch (const InputError& e) {
        throw FormatError("config line " + std::to_string(n) + ": " + e.what());
      }
    } else if (!cfg.decoder.set(key, value)) {
      throw FormatError("config line " + std::to_string(n) + ": unknown key '" +
                        std::string(key) + "'");
    }
  });
  cfg.decoder.validate();
  return cfg;
}

inline FileConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace lipogram

#endif  // LIPOGRAM_CONFIG_HPP_
