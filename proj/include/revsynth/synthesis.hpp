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

#include <cstdint>
#include <string_view>
#include <vector>

#include "revsynth/gate.hpp"
#include "revsynth/truth_vector.hpp"

namespace revsynth {

/// Per-gate record of a synthesis run: the truth-vector position being
/// fixed when the gate was emitted, and the specification after it.
struct SynthesisTrace {
  struct Entry {
    std::uint32_t position;
    TruthVector after;
  };
  std::vector<Entry> entries;
};

/// (n-1)*2^n + 1: worst-case gate count of both synthesis algorithms.
std::uint64_t synthesis_gate_bound(int lines);

/**
 * Transformation-based synthesis with generalized Toffoli gates.
 *
 * Returns gates in emission order: applied to `f` they produce the identity.
 * invert_circuit() of the result realizes `f` starting from the identity.
 * Step 0 applies NOTs for the 1-bits of f(0); step i then adds the missing
 * 1-bits of f+(i) (controls: 1-bits of the current f+(i)) and removes the
 * surplus ones (controls: 1-bits of i), each phase in ascending target order.
 */
Circuit mmd_synthesize(const TruthVector& f, SynthesisTrace* trace = nullptr);

enum class ScanOrder { Right, Left };

/**
 * Hypercube synthesis with multiple-control Toffoli gates.
 *
 * Right order fixes positions 2^n-1 down to 1, left order 0 up to 2^n-2.
 * At each position the wrong bits of the entry are corrected from least to
 * most significant, one full-control gate per bit; each gate's polarities
 * copy the entry's current bits, so it swaps exactly that entry with its
 * target-bit partner.
 */
Circuit hc_synthesize(const TruthVector& f, ScanOrder order,
                      SynthesisTrace* trace = nullptr);

/// The shorter of the right- and left-order cascades; ties go to right.
Circuit hc_bidirectional(const TruthVector& f);

enum class Algorithm { Mmd, HcRight, HcLeft, HcBidirectional };

/// "mmd", "hc-right", "hc-left", "hc-bi".
std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

Circuit synthesize(const TruthVector& f, Algorithm a);

}  // namespace revsynth
