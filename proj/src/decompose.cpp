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

#include "revsynth/decompose.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

void require_size(const Gate& g, int minimum, std::string_view what) {
  if (g.size() < minimum) {
    throw Error(std::string(what) + " needs a gate of size >= " +
                std::to_string(minimum) + ", got " + std::to_string(g.size()));
  }
}

void require_lines(int total) {
  if (total > Gate::kMaxLines) {
    throw Error("decomposition needs " + std::to_string(total) +
                " lines, more than " + std::to_string(Gate::kMaxLines));
  }
}

Gate toffoli(int lines, Control c1, Control c2, Line target) {
  const Control controls[] = {c1, c2};
  return Gate(lines, target, controls);
}

Control positive(Line l) { return {l, Polarity::Positive}; }

// Zeroed ladder on explicit ancilla lines; controls.size() >= 3.
void zeroed_ladder(int lines, const std::vector<Control>& x, Line target,
                   const std::vector<Line>& anc, std::vector<Gate>& out) {
  const std::size_t k = x.size() - 2;
  std::vector<Gate> compute;
  compute.push_back(toffoli(lines, x[0], x[1], anc[0]));
  for (std::size_t i = 1; i < k; ++i) {
    compute.push_back(toffoli(lines, positive(anc[i - 1]), x[i + 1], anc[i]));
  }
  out.insert(out.end(), compute.begin(), compute.end());
  out.push_back(toffoli(lines, positive(anc[k - 1]), x.back(), target));
  out.insert(out.end(), compute.rbegin(), compute.rend());
}

// Borrowed ladder on explicit ancilla lines; controls.size() >= 3 and
// anc.size() >= controls.size() - 2.
void borrowed_ladder(int lines, const std::vector<Control>& x, Line target,
                     const std::vector<Line>& anc, std::vector<Gate>& out) {
  const std::size_t k = x.size() - 2;
  const Gate top = toffoli(lines, x.back(), positive(anc[k - 1]), target);
  std::vector<Gate> descend;
  for (std::size_t i = k - 1; i >= 1; --i) {
    descend.push_back(toffoli(lines, x[i + 1], positive(anc[i - 1]), anc[i]));
  }
  const Gate base = toffoli(lines, x[0], x[1], anc[0]);
  for (int round = 0; round < 2; ++round) {
    out.push_back(top);
    out.insert(out.end(), descend.begin(), descend.end());
    out.push_back(base);
    out.insert(out.end(), descend.rbegin(), descend.rend());
  }
}

// Gate of any size over explicit borrowed lines; sizes <= 3 pass through.
void expand_with_borrowed(const Gate& g, const std::vector<Line>& pool,
                          std::vector<Gate>& out) {
  if (g.size() <= 3) {
    out.push_back(g);
    return;
  }
  const std::vector<Control> x = g.controls();
  if (pool.size() < x.size() - 2) {
    throw std::logic_error("not enough borrowed lines for ladder");
  }
  borrowed_ladder(g.lines(), x, g.target(), pool, out);
}

std::vector<Line> range(Line first, int count) {
  std::vector<Line> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

// Re-targets a gate onto a wider line range.
Gate widen(const Gate& g, int lines) {
  return Gate::from_masks(lines, g.target(), g.control_mask(),
                          g.negative_mask());
}

struct Split {
  int total_lines;
  int ancilla_lines;
  Line borrowed;
  Gate g1;
  Gate g2;
};

Split split(const Gate& g) {
  require_size(g, 5, "split_one_borrowed");
  const int n = g.lines();
  const std::uint32_t used = g.control_mask() | (std::uint32_t{1} << g.target());
  Line b = n;
  for (Line l = 0; l < n; ++l) {
    if (!(used >> l & 1)) {
      b = l;
      break;
    }
  }
  const int ancilla = b == n ? 1 : 0;
  const int total = n + ancilla;
  require_lines(total);

  const std::vector<Control> x = g.controls();
  const std::size_t first = static_cast<std::size_t>(g.size() / 2 + 1);
  std::vector<Control> s1(x.begin(), x.begin() + first);
  std::vector<Control> s2(x.begin() + first, x.end());
  s2.push_back(positive(b));
  std::sort(s2.begin(), s2.end(),
            [](const Control& a, const Control& c) { return a.line < c.line; });
  return {total, ancilla, b, Gate(total, b, s1), Gate(total, g.target(), s2)};
}

// Lines of `total` touched by neither control nor target of `g`.
std::vector<Line> untouched(const Gate& g, int total) {
  const std::uint32_t used = g.control_mask() | (std::uint32_t{1} << g.target());
  std::vector<Line> out;
  for (Line l = 0; l < total; ++l) {
    if (!(used >> l & 1)) out.push_back(l);
  }
  return out;
}

}  // namespace

std::string_view ancilla_mode_name(AncillaMode mode) {
  return mode == AncillaMode::ZeroedRestored ? "zeroed" : "borrowed";
}

AncillaCircuit ladder_zeroed(const Gate& g) {
  require_size(g, 4, "ladder_zeroed");
  const int n = g.lines();
  const int k = g.size() - 3;
  require_lines(n + k);
  std::vector<Gate> gates;
  zeroed_ladder(n + k, g.controls(), g.target(), range(n, k), gates);
  return {n, k, AncillaMode::ZeroedRestored, Circuit(n + k, std::move(gates))};
}

AncillaCircuit ladder_borrowed(const Gate& g) {
  require_size(g, 5, "ladder_borrowed");
  const int n = g.lines();
  const int k = g.size() - 3;
  require_lines(n + k);
  std::vector<Gate> gates;
  borrowed_ladder(n + k, g.controls(), g.target(), range(n, k), gates);
  return {n, k, AncillaMode::BorrowedRestored,
          Circuit(n + k, std::move(gates))};
}

AncillaCircuit split_one_borrowed(const Gate& g) {
  const Split s = split(g);
  return {g.lines(), s.ancilla_lines, AncillaMode::BorrowedRestored,
          Circuit(s.total_lines, {s.g1, s.g2, s.g1, s.g2})};
}

AncillaCircuit expand_one_garbage(const Gate& g) {
  const Split s = split(g);
  std::vector<Gate> half1;
  std::vector<Gate> half2;
  expand_with_borrowed(s.g1, untouched(s.g1, s.total_lines), half1);
  expand_with_borrowed(s.g2, untouched(s.g2, s.total_lines), half2);
  std::vector<Gate> gates;
  for (int round = 0; round < 2; ++round) {
    gates.insert(gates.end(), half1.begin(), half1.end());
    gates.insert(gates.end(), half2.begin(), half2.end());
  }
  return {g.lines(), s.ancilla_lines, AncillaMode::BorrowedRestored,
          Circuit(s.total_lines, std::move(gates))};
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Zeroed: return "zeroed";
    case Strategy::Borrowed: return "borrowed";
    case Strategy::OneGarbage: return "one-garbage";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s :
       {Strategy::Zeroed, Strategy::Borrowed, Strategy::OneGarbage}) {
    if (strategy_name(s) == name) return s;
  }
  throw Error("unknown strategy '" + std::string(name) +
              "' (expected zeroed, borrowed or one-garbage)");
}

AncillaCircuit decompose_circuit(const Circuit& c, Strategy strategy) {
  std::vector<AncillaCircuit> parts;
  int ancilla = 0;
  for (const Gate& g : c) {
    if (g.size() <= 3) continue;
    AncillaCircuit part = strategy == Strategy::Zeroed     ? ladder_zeroed(g)
                          : strategy == Strategy::Borrowed ? ladder_borrowed(g)
                                                           : expand_one_garbage(g);
    ancilla = std::max(ancilla, part.ancilla_lines);
    parts.push_back(std::move(part));
  }
  const int total = c.lines() + ancilla;
  require_lines(total);
  Circuit out(total);
  std::size_t next = 0;
  for (const Gate& g : c) {
    if (g.size() <= 3) {
      out.push_back(widen(g, total));
      continue;
    }
    for (const Gate& sub : parts[next].gates) out.push_back(widen(sub, total));
    ++next;
  }
  const AncillaMode mode = strategy == Strategy::Zeroed
                               ? AncillaMode::ZeroedRestored
                               : AncillaMode::BorrowedRestored;
  return {c.lines(), ancilla, mode, std::move(out)};
}

EquivalenceResult verify_equivalence(const Circuit& spec,
                                     const AncillaCircuit& impl) {
  const int n = impl.principal_lines;
  if (spec.lines() != n) {
    throw Error("specification has " + std::to_string(spec.lines()) +
                " lines, implementation " + std::to_string(n));
  }
  if (impl.gates.lines() != impl.total_lines()) {
    throw Error("implementation circuit width does not match its line counts");
  }
  if (impl.total_lines() > kMaxVerifyLines) {
    throw Error("verification is limited to " +
                std::to_string(kMaxVerifyLines) + " lines, got " +
                std::to_string(impl.total_lines()));
  }
  const Value principal = (Value{1} << n) - 1;
  const int free_bits = impl.mode == AncillaMode::ZeroedRestored
                            ? n
                            : impl.total_lines();
  const std::uint64_t inputs = std::uint64_t{1} << free_bits;
  for (std::uint64_t in = 0; in < inputs; ++in) {
    const Value x = static_cast<Value>(in);
    const Value expected = simulate(spec, x & principal) | (x & ~principal);
    const Value actual = simulate(impl.gates, x);
    if (actual != expected) {
      return {false, in + 1, Counterexample{x, expected, actual}};
    }
  }
  return {true, inputs, std::nullopt};
}

EquivalenceResult verify_equivalence(const Gate& spec,
                                     const AncillaCircuit& impl) {
  return verify_equivalence(Circuit(spec.lines(), {spec}), impl);
}

}  // namespace revsynth
