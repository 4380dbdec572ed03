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

#pragma once

#include <string_view>
#include <vector>

#include "revsynth/gate.hpp"
#include "revsynth/truth_vector.hpp"

namespace revsynth {

/// The two gate families whose one-gate permutations generate S_{2^n}.
enum class GeneratorFamily {
  GeneralizedToffoli,  // C_I: one target, any subset of positive controls
  MultipleControl,     // C_H: one target, all other lines as controls
};

/// "I" or "H", after the Cayley graph the family generates.
std::string_view graph_label(GeneratorFamily family);

struct Generator {
  Gate gate;
  TruthVector perm;
};

/**
 * All n*2^(n-1) gates of one family, paired with the permutation each
 * realizes. Members are ordered by target line, then by control pattern
 * read as an integer (the control mask for C_I, the positive-control mask
 * for C_H).
 */
class GeneratorSet {
 public:
  static constexpr int kMaxLines = 10;

  GeneratorSet(GeneratorFamily family, int lines);

  GeneratorFamily family() const { return family_; }
  int lines() const { return lines_; }
  std::size_t size() const { return members_.size(); }
  const Generator& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Generator>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  GeneratorFamily family_;
  int lines_;
  std::vector<Generator> members_;
};

GeneratorSet enumerate_generalized_toffoli(int lines);
GeneratorSet enumerate_multiple_control(int lines);

}  // namespace revsynth
