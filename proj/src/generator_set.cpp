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

#include "revsynth/generator_set.hpp"

#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

std::string_view graph_label(GeneratorFamily family) {
  return family == GeneratorFamily::GeneralizedToffoli ? "I" : "H";
}

GeneratorSet::GeneratorSet(GeneratorFamily family, int lines)
    : family_(family), lines_(lines) {
  if (lines < 1 || lines > kMaxLines) {
    throw Error("generator sets are enumerated for n in [1, " +
                std::to_string(kMaxLines) + "], got " + std::to_string(lines));
  }
  const std::uint32_t all = (std::uint32_t{1} << lines) - 1;
  members_.reserve(static_cast<std::size_t>(lines) << (lines - 1));
  for (Line t = 0; t < lines; ++t) {
    const std::uint32_t others = all & ~(std::uint32_t{1} << t);
    // Walk the subsets of `others` in increasing integer order.
    for (std::uint32_t pattern = 0;; pattern = (pattern - others) & others) {
      Gate g = family == GeneratorFamily::GeneralizedToffoli
                   ? Gate::from_masks(lines, t, pattern)
                   : Gate::from_masks(lines, t, others, others & ~pattern);
      members_.push_back({g, gate_perm(g)});
      if (pattern == others) break;
    }
  }
}

GeneratorSet enumerate_generalized_toffoli(int lines) {
  return GeneratorSet(GeneratorFamily::GeneralizedToffoli, lines);
}

GeneratorSet enumerate_multiple_control(int lines) {
  return GeneratorSet(GeneratorFamily::MultipleControl, lines);
}

}  // namespace revsynth
