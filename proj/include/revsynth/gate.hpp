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
#include <span>
#include <vector>

#include "revsynth/truth_vector.hpp"

namespace revsynth {

using Line = int;

enum class Polarity : std::uint8_t { Positive, Negative };

struct Control {
  Line line;
  Polarity polarity = Polarity::Positive;

  bool operator==(const Control&) const = default;
};

/**
 * A Toffoli-family gate: flips `target` iff every positive control carries 1
 * and every negative control carries 0. Covers NOT (no controls), CNOT,
 * Toffoli, generalized Toffoli (positive controls only) and multiple-control
 * Toffoli (all other lines are controls, mixed polarity).
 *
 * Lines are numbered from 0 = least significant bit.
 */
class Gate {
 public:
  static constexpr int kMaxLines = 32;

  Gate(int lines, Line target, std::span<const Control> controls = {});

  /// Controls given as bit masks; `negative_mask` must be a subset of
  /// `control_mask`.
  static Gate from_masks(int lines, Line target, std::uint32_t control_mask,
                         std::uint32_t negative_mask = 0);

  int lines() const { return lines_; }
  Line target() const { return target_; }
  std::uint32_t control_mask() const { return control_mask_; }
  std::uint32_t negative_mask() const { return negative_mask_; }

  /// Gate size: number of controls plus the target.
  int size() const;
  /// Number of negative controls.
  int negative_count() const;
  /// Controls in ascending line order.
  std::vector<Control> controls() const;

  bool fires(Value x) const {
    return (x & control_mask_) == (control_mask_ & ~negative_mask_);
  }
  Value apply(Value x) const {
    return fires(x) ? x ^ (Value{1} << target_) : x;
  }

  /// All controls positive.
  bool is_generalized_toffoli() const { return negative_mask_ == 0; }
  /// Every line other than the target is a control.
  bool is_full_control() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate() = default;

  int lines_ = 0;
  Line target_ = 0;
  std::uint32_t control_mask_ = 0;
  std::uint32_t negative_mask_ = 0;
};

/// Ordered gate sequence over a fixed number of lines. Gates are applied
/// front to back.
class Circuit {
 public:
  explicit Circuit(int lines) : lines_(lines) {}
  Circuit(int lines, std::vector<Gate> gates);

  int lines() const { return lines_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }
  const std::vector<Gate>& gates() const { return gates_; }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  void push_back(const Gate& g);
  void append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  int lines_;
  std::vector<Gate> gates_;
};

/// Whole-vector application: every entry is mapped through the gate, i.e.
/// the result is compose(gate_perm(g), tv).
TruthVector apply_gate(const Gate& g, const TruthVector& tv);

/// The permutation a gate realizes: apply_gate(g, identity(n)).
TruthVector gate_perm(const Gate& g);

TruthVector apply_circuit(const Circuit& c, const TruthVector& tv);

/// Runs a single basis state through the circuit.
Value simulate(const Circuit& c, Value x);

/// Reverses gate order; every gate in the family is its own inverse.
Circuit invert_circuit(const Circuit& c);

}  // namespace revsynth
