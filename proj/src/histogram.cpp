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

#include "revsynth/histogram.hpp"

#include <numeric>
#include <sstream>

namespace revsynth {

void Histogram::add(std::size_t key, std::uint64_t count) {
  if (key >= counts_.size()) counts_.resize(key + 1, 0);
  counts_[key] += count;
}

void Histogram::merge(const Histogram& other) {
  for (std::size_t k = 0; k < other.counts_.size(); ++k) {
    if (other.counts_[k]) add(k, other.counts_[k]);
  }
}

std::size_t Histogram::max_key() const {
  for (std::size_t k = counts_.size(); k-- > 0;) {
    if (counts_[k]) return k;
  }
  return 0;
}

std::uint64_t Histogram::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

double Histogram::mean() const {
  const std::uint64_t n = total();
  if (n == 0) return 0.0;
  long double sum = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) sum += k * counts_[k];
  return static_cast<double>(sum / n);
}

std::string Histogram::to_csv(const std::string& header) const {
  std::ostringstream out;
  out << header << '\n';
  for (std::size_t k = 0; k <= max_key() && k < counts_.size(); ++k) {
    out << k << ',' << counts_[k] << '\n';
  }
  return out.str();
}

}  // namespace revsynth
