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

#include <string>
#include <string_view>

#include "revsynth/gate.hpp"
#include "revsynth/truth_vector.hpp"

namespace revsynth {

/// Lines are named a, b, c, ... with a = line 0, so at most 26 lines.
inline constexpr int kMaxNamedLines = 26;

/**
 * Truth-vector text: optional `#` comment lines, then 2^n decimal integers
 * separated by whitespace or newlines. n is inferred from the count.
 */
TruthVector parse_truth_vector(std::string_view text);

/// Entries on one line separated by single spaces, newline-terminated.
std::string format_truth_vector(const TruthVector& tv);

/**
 * Circuit text in a tfc-style dialect:
 *
 *     # comment
 *     .n 3
 *     t3 b,c,a
 *     t2 a',b
 *     t1 c
 *
 * `t<k>` declares a gate of size k; operands are comma separated, controls
 * first and target last; a trailing apostrophe marks a negative control.
 */
Circuit parse_circuit(std::string_view text);

/// Writes `.n` and one line per gate; controls in ascending line order.
std::string format_circuit(const Circuit& c);

/// One gate in operand form, e.g. "t3 a,c',b".
std::string format_gate(const Gate& g);

char line_name(Line l);

}  // namespace revsynth
