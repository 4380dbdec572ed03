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

#include "revsynth/gate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

void check_gate_fits(int expected, int actual) {
  if (expected != actual) {
    throw Error("gate/vector line count mismatch: " + std::to_string(actual) +
                " vs " + std::to_string(expected));
  }
}

}  // namespace

Gate::Gate(int lines, Line target, std::span<const Control> controls) {
  std::uint32_t control_mask = 0;
  std::uint32_t negative_mask = 0;
  for (const Control& c : controls) {
    if (c.line < 0 || c.line >= lines) {
      throw Error("control line " + std::to_string(c.line) +
                  " outside [0, " + std::to_string(lines) + ")");
    }
    const std::uint32_t bit = std::uint32_t{1} << c.line;
    if (control_mask & bit) {
      throw Error("duplicate control on line " + std::to_string(c.line));
    }
    control_mask |= bit;
    if (c.polarity == Polarity::Negative) negative_mask |= bit;
  }
  *this = from_masks(lines, target, control_mask, negative_mask);
}

Gate Gate::from_masks(int lines, Line target, std::uint32_t control_mask,
                      std::uint32_t negative_mask) {
  if (lines < 1 || lines > kMaxLines) {
    throw Error("gate line count must be in [1, " +
                std::to_string(kMaxLines) + "], got " + std::to_string(lines));
  }
  if (target < 0 || target >= lines) {
    throw Error("target line " + std::to_string(target) + " outside [0, " +
                std::to_string(lines) + ")");
  }
  const std::uint32_t all =
      lines == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << lines) - 1;
  if (control_mask & ~all) throw Error("control outside the gate's lines");
  if (control_mask & (std::uint32_t{1} << target)) {
    throw Error("target line " + std::to_string(target) +
                " is also a control");
  }
  if (negative_mask & ~control_mask) {
    throw Error("polarity given for a line that is not a control");
  }
  Gate g;
  g.lines_ = lines;
  g.target_ = target;
  g.control_mask_ = control_mask;
  g.negative_mask_ = negative_mask;
  return g;
}

int Gate::size() const { return std::popcount(control_mask_) + 1; }

int Gate::negative_count() const { return std::popcount(negative_mask_); }

std::vector<Control> Gate::controls() const {
  std::vector<Control> out;
  for (Line l = 0; l < lines_; ++l) {
    const std::uint32_t bit = std::uint32_t{1} << l;
    if (control_mask_ & bit) {
      out.push_back({l, (negative_mask_ & bit) ? Polarity::Negative
                                                : Polarity::Positive});
    }
  }
  return out;
}

bool Gate::is_full_control() const { return size() == lines_; }

Circuit::Circuit(int lines, std::vector<Gate> gates) : lines_(lines) {
  gates_.reserve(gates.size());
  for (const Gate& g : gates) push_back(g);
}

void Circuit::push_back(const Gate& g) {
  check_gate_fits(lines_, g.lines());
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  check_gate_fits(lines_, other.lines());
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

TruthVector apply_gate(const Gate& g, const TruthVector& tv) {
  check_gate_fits(tv.lines(), g.lines());
  std::vector<Value> e(tv.begin(), tv.end());
  for (Value& v : e) v = g.apply(v);
  return TruthVector::from_entries(std::move(e));
}

TruthVector gate_perm(const Gate& g) { return apply_gate(g, identity(g.lines())); }

TruthVector apply_circuit(const Circuit& c, const TruthVector& tv) {
  check_gate_fits(tv.lines(), c.lines());
  std::vector<Value> e(tv.begin(), tv.end());
  for (Value& v : e) v = simulate(c, v);
  return TruthVector::from_entries(std::move(e));
}

Value simulate(const Circuit& c, Value x) {
  for (const Gate& g : c) x = g.apply(x);
  return x;
}

Circuit invert_circuit(const Circuit& c) {
  std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
  return Circuit(c.lines(), std::move(gates));
}

}  // namespace revsynth
