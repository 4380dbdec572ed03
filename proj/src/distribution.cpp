// Copyright 2026 The revsynth Authors
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

#include "revsynth/distribution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

Histogram gate_count_distribution(int lines, Algorithm algorithm) {
  if (lines < 1 || lines > kMaxEnumerationLines) {
    throw Error("exhaustive enumeration supports n in [1, " +
                std::to_string(kMaxEnumerationLines) + "]; n = " +
                std::to_string(lines) + " has (2^n)! permutations");
  }
  std::vector<Value> entries(std::size_t{1} << lines);
  std::iota(entries.begin(), entries.end(), Value{0});
  Histogram histogram;
  do {
    const Circuit c = synthesize(TruthVector::from_entries(entries), algorithm);
    histogram.add(c.size());
  } while (std::next_permutation(entries.begin(), entries.end()));
  return histogram;
}

}  // namespace revsynth
