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

#include <boost/multiprecision/cpp_int.hpp>

namespace mixedgraphs {

// Exact arithmetic used throughout the census: arbitrary-precision integers
// and canonical (lowest-terms) rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace mixedgraphs
