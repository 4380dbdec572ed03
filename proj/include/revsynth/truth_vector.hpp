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

namespace revsynth {

using Value = std::uint32_t;

/**
 * A reversible function on n lines written as its truth vector
 * f(0), ..., f(2^n - 1), i.e. a permutation of {0, ..., 2^n - 1}.
 *
 * Line 0 is the least significant bit of every value. Instances are
 * immutable and always hold a bijection.
 */
class TruthVector {
 public:
  static constexpr int kMaxLines = 24;

  /// Validates `entries` (length a power of two >= 2, bijective) and infers n.
  static TruthVector from_entries(std::vector<Value> entries);

  int lines() const { return lines_; }
  std::size_t size() const { return entries_.size(); }
  Value operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Value> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_identity() const;

  bool operator==(const TruthVector&) const = default;

 private:
  TruthVector(int lines, std::vector<Value> entries)
      : lines_(lines), entries_(std::move(entries)) {}

  int lines_;
  std::vector<Value> entries_;
};

TruthVector identity(int lines);

/// entries[i] = 2^n - 1 - i; every bit differs from the identity.
TruthVector reverse_perm(int lines);

/// (c . g)(i) = c(g(i)): apply g first, then c.
TruthVector compose(const TruthVector& c, const TruthVector& g);

TruthVector inverse(const TruthVector& p);

/// Number of differing bits between two n-bit values.
int hamming(Value x, Value y);

/// Hamming distance between the n*2^n-bit binary representations.
std::uint64_t hamming(const TruthVector& p, const TruthVector& s);

/// True for odd permutations.
bool is_odd(const TruthVector& p);

/// (2^n)! as a 64-bit integer; defined for n <= 4.
std::uint64_t group_order(int lines);

/// Lexicographic (Lehmer code) rank in [0, (2^n)!). Requires n <= 4.
std::uint64_t rank(const TruthVector& p);

/// Inverse of rank().
TruthVector unrank(std::uint64_t r, int lines);

}  // namespace revsynth
