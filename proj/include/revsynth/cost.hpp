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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "revsynth/gate.hpp"
#include "revsynth/generator_set.hpp"

namespace revsynth {

/// Ancilla budget a large gate may use when it is expanded to elementary
/// quantum gates: none, one, or size - 3.
enum class GarbagePolicy { Zero, One, NMinusThree };

/// "0", "1", "n-3".
std::string_view policy_name(GarbagePolicy p);
GarbagePolicy parse_policy(std::string_view name);

/**
 * Quantum cost of a gate of the given size with `negatives` negative
 * controls.
 *
 * Sizes 1-3 use the fixed small-gate costs under every policy (NOT 1, CNOT 1,
 * negative-control CNOT 2, Toffoli 5 / 5 / 7 for 0 / 1 / 2 negative
 * controls). From size 4 the policy formula applies: 2^s-3+2m with no
 * garbage, 24s-88 (24s-86 mixed) with one, 10s-25 (10s-23 mixed) with s-3.
 * The last two are defined from size 5; size 4 throws.
 */
std::uint64_t gate_cost(int size, int negatives, GarbagePolicy policy);
std::uint64_t gate_cost(const Gate& g, GarbagePolicy policy);

struct CircuitCost {
  std::uint64_t gate_count = 0;
  std::uint64_t quantum_cost = 0;

  bool operator==(const CircuitCost&) const = default;
};

CircuitCost circuit_cost(const Circuit& c, GarbagePolicy policy);

/// Largest gate_cost over every gate size and polarity pattern that fits on
/// `lines` lines and is priced under `policy`.
std::uint64_t max_gate_cost(int lines, GarbagePolicy policy);

/**
 * Worst-case quantum cost of synthesis over the Cayley graph built from
 * `family`: ((n-1)2^n + 1) times the per-gate cost of a size-n gate. The
 * multiple-control, no-garbage case needs the negative-control count m.
 */
std::uint64_t worst_case_qc(int lines, GeneratorFamily family,
                            GarbagePolicy policy,
                            std::optional<int> negatives = std::nullopt);

struct CostReport {
  struct Row {
    std::string gate;
    int size;
    int negatives;
    std::uint64_t cost;
  };

  int lines;
  GarbagePolicy policy;
  std::vector<Row> rows;
  CircuitCost totals;
  std::uint64_t gate_bound;     // (n-1)2^n + 1
  std::uint64_t cost_bound;     // gate_count * max_gate_cost
  bool within_bounds;
  // Extension rows not listed in the base cost table (negative-control CNOT).
  std::size_t extension_rows;
};

CostReport cost_report(const Circuit& c, GarbagePolicy policy);
nlohmann::json to_json(const CostReport& r);
std::string to_text(const CostReport& r);

}  // namespace revsynth
