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

// Umbrella header for the offline library. Remote provider clients live in
// lipogram/http.hpp.

#ifndef LIPOGRAM_LIPOGRAM_HPP_
#define LIPOGRAM_LIPOGRAM_HPP_

#include "lipogram/config.hpp"
#include "lipogram/decoder.hpp"
#include "lipogram/embedding.hpp"
#include "lipogram/error.hpp"
#include "lipogram/grammar.hpp"
#include "lipogram/lexicon.hpp"
#include "lipogram/metrics.hpp"
#include "lipogram/ngram.hpp"
#include "lipogram/passes.hpp"
#include "lipogram/pipeline.hpp"
#include "lipogram/sweep.hpp"
#include "lipogram/text.hpp"

#endif  // LIPOGRAM_LIPOGRAM_HPP_
