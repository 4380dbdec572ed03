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
#include <string_view>

#include "revsynth/gate.hpp"

namespace revsynth {

enum class AncillaMode {
  ZeroedRestored,    // ancilla must start at 0; returned to 0
  BorrowedRestored,  // ancilla may hold anything; returned unchanged
};

std::string_view ancilla_mode_name(AncillaMode mode);

/// Toffoli-level implementation over `principal_lines` original lines
/// followed by `ancilla_lines` extra lines.
struct AncillaCircuit {
  int principal_lines;
  int ancilla_lines;
  AncillaMode mode;
  Circuit gates;

  int total_lines() const { return principal_lines + ancilla_lines; }
};

/**
 * Compute/apply/uncompute ladder on s-3 zeroed ancillas (s = gate size,
 * s >= 4): anc1 = x1 & x2, anc_k = anc_{k-1} & x_{k+1}, the target is
 * flipped by the last ancilla and last control, then the ancillas are
 * uncomputed. 2s-5 gates of size <= 3. Negative controls stay on the
 * original control lines; ancilla controls are positive.
 */
AncillaCircuit ladder_zeroed(const Gate& g);

/**
 * Ladder on s-3 borrowed ancillas (s >= 5), which may hold arbitrary values
 * and are restored: the V-shaped chain (top, descend, base, ascend) is run
 * twice, 4(s-3) gates of size <= 3.
 */
AncillaCircuit ladder_borrowed(const Gate& g);

/**
 * Splits a gate (s >= 5) into G1 G2 G1 G2 around one borrowed line b. G1
 * takes the first floor(s/2)+1 controls and targets b; G2 takes the
 * remaining controls plus b (positive) and targets the original target.
 * b is the lowest-numbered line the gate does not touch, or one appended
 * ancilla when every line is used.
 */
AncillaCircuit split_one_borrowed(const Gate& g);

/// split_one_borrowed() with each half of size >= 4 further expanded by a
/// borrowed ladder that uses the other half's lines as ancillas.
AncillaCircuit expand_one_garbage(const Gate& g);

enum class Strategy { Zeroed, Borrowed, OneGarbage };

/// "zeroed", "borrowed", "one-garbage".
std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// Expands every gate of size >= 4 with `strategy`; smaller gates are kept.
AncillaCircuit decompose_circuit(const Circuit& c, Strategy strategy);

struct Counterexample {
  Value input;     // over all lines, ancillas above the principal lines
  Value expected;
  Value actual;
};

struct EquivalenceResult {
  bool equivalent;
  std::uint64_t inputs_checked;
  std::optional<Counterexample> counterexample;
};

/// Largest principal + ancilla line count verify_equivalence simulates.
inline constexpr int kMaxVerifyLines = 22;

/**
 * Exhaustively simulates `impl` and compares the principal lines with
 * `spec` applied to them; ancillas must come back unchanged. Zeroed mode
 * only feeds ancilla = 0. Returns the first mismatch.
 */
EquivalenceResult verify_equivalence(const Circuit& spec,
                                     const AncillaCircuit& impl);
EquivalenceResult verify_equivalence(const Gate& spec,
                                     const AncillaCircuit& impl);

}  // namespace revsynth
