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

#ifndef LIPOGRAM_ERROR_HPP_
#define LIPOGRAM_ERROR_HPP_

#include <stdexcept>

namespace lipogram {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or degenerate input (bad order, empty corpus, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed lexicon, model, config or CSV content.
class FormatError : public Error {
 public:
  using Error::Error;
};

// No constraint-free word is available to the decoder.
class EmptyVocabulary : public Error {
 public:
  using Error::Error;
};

// Every decoder hypothesis was pruned before reaching the minimum length.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

// A remote grammar or embedding service could not be reached or answered
// with something unparseable.
class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace lipogram

#endif  // LIPOGRAM_ERROR_HPP_
