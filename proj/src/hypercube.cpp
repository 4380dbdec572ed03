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

#include <stdexcept>
#include <string>

#include "revsynth/error.hpp"
#include "revsynth/synthesis.hpp"

namespace revsynth {

namespace {

// Corrects the entry at `position` bit by bit, least significant first.
void fix_position(std::vector<Value>& spec, Value position, int n,
                  Circuit& circuit, SynthesisTrace* trace) {
  const Value all = static_cast<Value>(spec.size() - 1);
  for (Line j = 0; j < n; ++j) {
    const Value current = spec[position];
    if (((current ^ position) >> j & 1) == 0) continue;
    const Value controls = all & ~(Value{1} << j);
    const Gate g = Gate::from_masks(n, j, controls, controls & ~current);
    for (Value& v : spec) v = g.apply(v);
    circuit.push_back(g);
    if (trace) {
      trace->entries.push_back({position, TruthVector::from_entries(spec)});
    }
  }
}

}  // namespace

Circuit hc_synthesize(const TruthVector& f, ScanOrder order,
                      SynthesisTrace* trace) {
  const int n = f.lines();
  std::vector<Value> spec(f.begin(), f.end());
  Circuit circuit(n);
  const Value last = static_cast<Value>(spec.size() - 1);
  if (order == ScanOrder::Right) {
    for (Value i = last; i >= 1; --i) fix_position(spec, i, n, circuit, trace);
  } else {
    for (Value i = 0; i < last; ++i) fix_position(spec, i, n, circuit, trace);
  }
  for (Value i = 0; i <= last; ++i) {
    if (spec[i] != i) {
      throw std::logic_error("hc_synthesize: cascade does not reach identity");
    }
  }
  return circuit;
}

Circuit hc_bidirectional(const TruthVector& f) {
  Circuit right = hc_synthesize(f, ScanOrder::Right);
  Circuit left = hc_synthesize(f, ScanOrder::Left);
  return left.size() < right.size() ? left : right;
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Mmd: return "mmd";
    case Algorithm::HcRight: return "hc-right";
    case Algorithm::HcLeft: return "hc-left";
    case Algorithm::HcBidirectional: return "hc-bi";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Mmd, Algorithm::HcRight, Algorithm::HcLeft,
                      Algorithm::HcBidirectional}) {
    if (algorithm_name(a) == name) return a;
  }
  throw Error("unknown algorithm '" + std::string(name) +
              "' (expected mmd, hc-right, hc-left or hc-bi)");
}

Circuit synthesize(const TruthVector& f, Algorithm a) {
  switch (a) {
    case Algorithm::Mmd: return mmd_synthesize(f);
    case Algorithm::HcRight: return hc_synthesize(f, ScanOrder::Right);
    case Algorithm::HcLeft: return hc_synthesize(f, ScanOrder::Left);
    case Algorithm::HcBidirectional: return hc_bidirectional(f);
  }
  throw std::logic_error("unhandled algorithm");
}

}  // namespace revsynth
