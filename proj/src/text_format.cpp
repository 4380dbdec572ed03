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

#include "revsynth/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    f(number++, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::optional<unsigned long> parse_unsigned(std::string_view s) {
  unsigned long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

char line_name(Line l) { return static_cast<char>('a' + l); }

TruthVector parse_truth_vector(std::string_view text) {
  std::vector<Value> entries;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t\r", pos);
      if (start == std::string_view::npos) break;
      auto stop = line.find_first_of(" \t\r", start);
      if (stop == std::string_view::npos) stop = line.size();
      const auto token = line.substr(start, stop - start);
      const auto v = parse_unsigned(token);
      if (!v || *v > 0xFFFFFFFFul) {
        throw ParseError(number, "expected a non-negative integer, got '" +
                                     std::string(token) + "'");
      }
      entries.push_back(static_cast<Value>(*v));
      pos = stop;
    }
  });
  return TruthVector::from_entries(std::move(entries));
}

std::string format_truth_vector(const TruthVector& tv) {
  std::string out;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(tv[i]);
  }
  out += '\n';
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    if (line.starts_with(".n")) {
      if (circuit) throw ParseError(number, "duplicate .n directive");
      const auto v = parse_unsigned(trim(line.substr(2)));
      if (!v || *v < 1 || *v > kMaxNamedLines) {
        throw ParseError(number, ".n expects a line count in [1, 26]");
      }
      circuit.emplace(static_cast<int>(*v));
      return;
    }
    if (line.front() == '.') {
      throw ParseError(number, "unknown directive '" + std::string(line) + "'");
    }
    if (line.front() != 't') {
      throw ParseError(number, "expected a gate 't<k> ...', got '" +
                                   std::string(line) + "'");
    }
    if (!circuit) throw ParseError(number, "gate before .n directive");
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ParseError(number, "gate has no operands");
    }
    const auto declared = parse_unsigned(line.substr(1, space - 1));
    if (!declared || *declared < 1) {
      throw ParseError(number, "malformed gate size in '" +
                                   std::string(line.substr(0, space)) + "'");
    }

    const int lines = circuit->lines();
    std::vector<Control> operands;
    std::uint32_t used = 0;
    std::string_view rest = trim(line.substr(space));
    while (true) {
      const auto comma = rest.find(',');
      std::string_view op = trim(rest.substr(0, comma));
      Polarity polarity = Polarity::Positive;
      if (!op.empty() && op.back() == '\'') {
        polarity = Polarity::Negative;
        op = trim(op.substr(0, op.size() - 1));
      }
      if (op.size() != 1 || op[0] < 'a' || op[0] >= 'a' + lines) {
        throw ParseError(number, "unknown line name '" + std::string(op) + "'");
      }
      const Line l = op[0] - 'a';
      if (used & (std::uint32_t{1} << l)) {
        throw ParseError(number, "duplicate operand '" + std::string(op) + "'");
      }
      used |= std::uint32_t{1} << l;
      operands.push_back({l, polarity});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (operands.size() != *declared) {
      throw ParseError(number, "gate declares size " +
                                   std::to_string(*declared) + " but has " +
                                   std::to_string(operands.size()) +
                                   " operands");
    }
    const Control target = operands.back();
    if (target.polarity == Polarity::Negative) {
      throw ParseError(number, "target cannot carry an apostrophe");
    }
    operands.pop_back();
    circuit->push_back(Gate(lines, target.line, operands));
  });
  if (!circuit) throw ParseError(1, "missing .n directive");
  return *std::move(circuit);
}

std::string format_gate(const Gate& g) {
  std::string out = "t" + std::to_string(g.size()) + " ";
  for (const Control& c : g.controls()) {
    out += line_name(c.line);
    if (c.polarity == Polarity::Negative) out += '\'';
    out += ',';
  }
  out += line_name(g.target());
  return out;
}

std::string format_circuit(const Circuit& c) {
  if (c.lines() > kMaxNamedLines) {
    throw Error("the circuit text format names at most 26 lines");
  }
  std::string out = ".n " + std::to_string(c.lines()) + "\n";
  for (const Gate& g : c) {
    out += format_gate(g);
    out += '\n';
  }
  return out;
}

}  // namespace revsynth
