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

#include "revsynth/cost.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "revsynth/error.hpp"
#include "revsynth/synthesis.hpp"
#include "revsynth/text_format.hpp"

namespace revsynth {

namespace {

std::uint64_t small_gate_cost(int size, int negatives) {
  switch (size) {
    case 1: return 1;
    case 2: return negatives == 0 ? 1 : 2;
    default: return negatives == 2 ? 7 : 5;
  }
}

// Signed formulas so that out-of-range sizes can be diagnosed, not wrapped.
std::int64_t large_gate_cost(int size, int negatives, GarbagePolicy policy) {
  const bool mixed = negatives > 0;
  switch (policy) {
    case GarbagePolicy::Zero:
      return (std::int64_t{1} << size) - 3 + 2 * negatives;
    case GarbagePolicy::One:
      return 24 * size - (mixed ? 86 : 88);
    case GarbagePolicy::NMinusThree:
      return 10 * size - (mixed ? 23 : 25);
  }
  return 0;
}

}  // namespace

std::string_view policy_name(GarbagePolicy p) {
  switch (p) {
    case GarbagePolicy::Zero: return "0";
    case GarbagePolicy::One: return "1";
    case GarbagePolicy::NMinusThree: return "n-3";
  }
  return "?";
}

GarbagePolicy parse_policy(std::string_view name) {
  for (GarbagePolicy p : {GarbagePolicy::Zero, GarbagePolicy::One,
                          GarbagePolicy::NMinusThree}) {
    if (policy_name(p) == name) return p;
  }
  throw Error("unknown garbage policy '" + std::string(name) +
              "' (expected 0, 1 or n-3)");
}

std::uint64_t gate_cost(int size, int negatives, GarbagePolicy policy) {
  if (size < 1 || size > 62 || negatives < 0 || negatives >= size) {
    throw Error("invalid gate shape: size " + std::to_string(size) + ", " +
                std::to_string(negatives) + " negative controls");
  }
  if (size <= 3) return small_gate_cost(size, negatives);
  if (policy != GarbagePolicy::Zero && size < 5) {
    throw Error("garbage policy " + std::string(policy_name(policy)) +
                " is defined for gates of size >= 5, got size " +
                std::to_string(size));
  }
  return static_cast<std::uint64_t>(large_gate_cost(size, negatives, policy));
}

std::uint64_t gate_cost(const Gate& g, GarbagePolicy policy) {
  return gate_cost(g.size(), g.negative_count(), policy);
}

CircuitCost circuit_cost(const Circuit& c, GarbagePolicy policy) {
  CircuitCost total;
  for (const Gate& g : c) {
    total.gate_count += 1;
    total.quantum_cost += gate_cost(g, policy);
  }
  return total;
}

std::uint64_t max_gate_cost(int lines, GarbagePolicy policy) {
  std::uint64_t best = 0;
  for (int s = 1; s <= lines; ++s) {
    if (policy != GarbagePolicy::Zero && s == 4) continue;
    for (int m = 0; m < s; ++m) best = std::max(best, gate_cost(s, m, policy));
  }
  return best;
}

std::uint64_t worst_case_qc(int lines, GeneratorFamily family,
                            GarbagePolicy policy,
                            std::optional<int> negatives) {
  if (lines < 2 || lines > 30) {
    throw Error("worst-case cost is tabulated for n in [2, 30], got " +
                std::to_string(lines));
  }
  if (policy != GarbagePolicy::Zero && lines < 5) {
    throw Error("garbage policy " + std::string(policy_name(policy)) +
                " is defined for n >= 5, got n = " + std::to_string(lines));
  }
  int m = 0;
  const bool multiple = family == GeneratorFamily::MultipleControl;
  if (multiple && policy == GarbagePolicy::Zero) {
    if (!negatives) {
      throw Error("the multiple-control no-garbage bound needs the number "
                  "of negative controls m");
    }
    m = *negatives;
    if (m < 0 || m > lines - 1) {
      throw Error("m must be in [0, n-1], got " + std::to_string(m));
    }
  }
  std::int64_t factor = 0;
  switch (policy) {
    case GarbagePolicy::Zero:
      factor = (std::int64_t{1} << lines) - 3 + 2 * m;
      break;
    case GarbagePolicy::One:
      factor = 24 * lines - (multiple ? 86 : 88);
      break;
    case GarbagePolicy::NMinusThree:
      factor = 10 * lines - (multiple ? 23 : 25);
      break;
  }
  return synthesis_gate_bound(lines) * static_cast<std::uint64_t>(factor);
}

CostReport cost_report(const Circuit& c, GarbagePolicy policy) {
  CostReport r{c.lines(), policy, {}, {}, 0, 0, true, 0};
  for (const Gate& g : c) {
    const std::uint64_t cost = gate_cost(g, policy);
    r.rows.push_back({format_gate(g), g.size(), g.negative_count(), cost});
    if (g.size() == 2 && g.negative_count() == 1) ++r.extension_rows;
  }
  r.totals = circuit_cost(c, policy);
  r.gate_bound = synthesis_gate_bound(c.lines());
  r.cost_bound = r.totals.gate_count * max_gate_cost(c.lines(), policy);
  r.within_bounds = r.totals.gate_count <= r.gate_bound &&
                    r.totals.quantum_cost <= r.cost_bound;
  return r;
}

nlohmann::json to_json(const CostReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"gate", row.gate},
                    {"size", row.size},
                    {"negatives", row.negatives},
                    {"cost", row.cost}});
  }
  return {{"lines", r.lines},
          {"garbage", policy_name(r.policy)},
          {"gates", rows},
          {"gate_count", r.totals.gate_count},
          {"quantum_cost", r.totals.quantum_cost},
          {"gate_bound", r.gate_bound},
          {"cost_bound", r.cost_bound},
          {"within_bounds", r.within_bounds},
          {"extension_rows", r.extension_rows}};
}

std::string to_text(const CostReport& r) {
  std::size_t width = 4;
  for (const auto& row : r.rows) width = std::max(width, row.gate.size());
  std::ostringstream out;
  out << "garbage: " << policy_name(r.policy) << "\n";
  out << std::left << std::setw(static_cast<int>(width)) << "gate" << std::right
      << std::setw(6) << "size" << std::setw(4) << "m" << std::setw(8)
      << "cost" << "\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << row.gate
        << std::right << std::setw(6) << row.size << std::setw(4)
        << row.negatives << std::setw(8) << row.cost << "\n";
  }
  out << "gc " << r.totals.gate_count << " (bound " << r.gate_bound << ")\n";
  out << "qc " << r.totals.quantum_cost << " (bound " << r.cost_bound << ")\n";
  out << "within bounds: " << (r.within_bounds ? "yes" : "no") << "\n";
  if (r.extension_rows) {
    out << "note: " << r.extension_rows
        << " negative-control CNOT(s) priced at 2 (extension)\n";
  }
  return out.str();
}

}  // namespace revsynth
