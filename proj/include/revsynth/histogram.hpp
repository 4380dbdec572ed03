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
#include <string>
#include <vector>

namespace revsynth {

/// Counts indexed by a small non-negative integer (gate count or distance).
class Histogram {
 public:
  void add(std::size_t key, std::uint64_t count = 1);
  void merge(const Histogram& other);

  std::uint64_t count(std::size_t key) const {
    return key < counts_.size() ? counts_[key] : 0;
  }
  /// Largest key with a non-zero count (0 when empty).
  std::size_t max_key() const;
  std::uint64_t total() const;
  double mean() const;

  const std::vector<std::uint64_t>& counts() const { return counts_; }

  /// `header` then one "key,count" row per key in ascending order.
  std::string to_csv(const std::string& header) const;

  bool operator==(const Histogram&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

}  // namespace revsynth
