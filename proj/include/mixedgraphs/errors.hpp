// Copyright 2026 The mixedgraphs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mixedgraphs {

// Input-validation failure raised by graph and permutation constructors.
// Each violated invariant gets its own kind so callers can tell them apart.
class ValidationError : public std::invalid_argument {
 public:
  enum class Kind {
    kSelfLoop,
    kEndpointOutOfRange,
    kDuplicate,
    kEdgeArcOverlap,
    kBidirectedArcPair,
    kBadPermutation,
    kSizeMismatch,
  };

  ValidationError(Kind kind, const std::string& message)
      : std::invalid_argument(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Malformed text-format input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarded exhaustive-search or census bound was exceeded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mixedgraphs
