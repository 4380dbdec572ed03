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

#include <bit>
#include <stdexcept>

#include "revsynth/synthesis.hpp"

namespace revsynth {

std::uint64_t synthesis_gate_bound(int lines) {
  return (static_cast<std::uint64_t>(lines - 1) << lines) + 1;
}

Circuit mmd_synthesize(const TruthVector& f, SynthesisTrace* trace) {
  const int n = f.lines();
  std::vector<Value> spec(f.begin(), f.end());
  Circuit circuit(n);

  auto emit = [&](std::uint32_t position, const Gate& g) {
    for (Value& v : spec) v = g.apply(v);
    circuit.push_back(g);
    if (trace) {
      trace->entries.push_back({position, TruthVector::from_entries(spec)});
    }
  };

  for (Line j = 0; j < n; ++j) {
    if (spec[0] >> j & 1) emit(0, Gate::from_masks(n, j, 0));
  }

  for (Value i = 1; i < spec.size(); ++i) {
    if (spec[i] == i) continue;
    const Value p = i & ~spec[i];
    const Value q = spec[i] & ~i;
    for (Value bits = p; bits; bits &= bits - 1) {
      const Line j = std::countr_zero(bits);
      emit(i, Gate::from_masks(n, j, spec[i]));
    }
    for (Value bits = q; bits; bits &= bits - 1) {
      const Line k = std::countr_zero(bits);
      emit(i, Gate::from_masks(n, k, i));
    }
  }

  for (Value i = 0; i < spec.size(); ++i) {
    if (spec[i] != i) {
      throw std::logic_error("mmd_synthesize: cascade does not reach identity");
    }
  }
  return circuit;
}

}  // namespace revsynth
