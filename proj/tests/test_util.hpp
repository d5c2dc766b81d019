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

#include <sys/wait.h>

#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "mixedgraphs/graph.hpp"
#include "mixedgraphs/random_models.hpp"
#include "mixedgraphs/rng.hpp"

namespace mixedgraphs::testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string quoted(const std::string& path) {
  return "\"" + path + "\"";
}

inline Permutation random_permutation(int n, SplitMix64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[i], images[j]);
  }
  return Permutation(std::move(images));
}

inline MixedGraph random_mixed_graph(int n, SplitMix64& rng, double p = 0.5) {
  return mc::sample_mixed(n, p, rng);
}

inline Graph random_graph(int n, SplitMix64& rng, double p = 0.25) {
  return mc::sample_graph(n, p, rng);
}

}  // namespace mixedgraphs::testutil
