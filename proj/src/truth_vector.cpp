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

#include "revsynth/truth_vector.hpp"

#include <bit>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

constexpr int kMaxRankLines = 4;

void check_lines(int lines) {
  if (lines < 1 || lines > TruthVector::kMaxLines) {
    throw Error("line count must be in [1, " +
                std::to_string(TruthVector::kMaxLines) + "], got " +
                std::to_string(lines));
  }
}

void check_same_lines(const TruthVector& a, const TruthVector& b) {
  if (a.lines() != b.lines()) {
    throw Error("line count mismatch: " + std::to_string(a.lines()) +
                " vs " + std::to_string(b.lines()));
  }
}

}  // namespace

TruthVector TruthVector::from_entries(std::vector<Value> entries) {
  const std::size_t size = entries.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw Error("truth vector length must be a power of two >= 2, got " +
                std::to_string(size));
  }
  const int lines = std::countr_zero(size);
  check_lines(lines);
  std::vector<bool> seen(size, false);
  for (Value v : entries) {
    if (v >= size) {
      throw Error("value " + std::to_string(v) + " out of range [0, " +
                  std::to_string(size) + ")");
    }
    if (seen[v]) {
      throw Error("not a permutation: duplicated value " + std::to_string(v));
    }
    seen[v] = true;
  }
  return TruthVector(lines, std::move(entries));
}

bool TruthVector::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != i) return false;
  }
  return true;
}

TruthVector identity(int lines) {
  check_lines(lines);
  std::vector<Value> e(std::size_t{1} << lines);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Value>(i);
  return TruthVector::from_entries(std::move(e));
}

TruthVector reverse_perm(int lines) {
  check_lines(lines);
  std::vector<Value> e(std::size_t{1} << lines);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<Value>(e.size() - 1 - i);
  }
  return TruthVector::from_entries(std::move(e));
}

TruthVector compose(const TruthVector& c, const TruthVector& g) {
  check_same_lines(c, g);
  std::vector<Value> e(g.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = c[g[i]];
  return TruthVector::from_entries(std::move(e));
}

TruthVector inverse(const TruthVector& p) {
  std::vector<Value> e(p.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[p[i]] = static_cast<Value>(i);
  return TruthVector::from_entries(std::move(e));
}

int hamming(Value x, Value y) { return std::popcount(x ^ y); }

std::uint64_t hamming(const TruthVector& p, const TruthVector& s) {
  check_same_lines(p, s);
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += hamming(p[i], s[i]);
  return d;
}

bool is_odd(const TruthVector& p) {
  // parity = (size - number of cycles) mod 2
  std::vector<bool> visited(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = p[j]) visited[j] = true;
  }
  return (p.size() - cycles) % 2 == 1;
}

std::uint64_t group_order(int lines) {
  if (lines < 1 || lines > kMaxRankLines) {
    throw Error("(2^n)! does not fit in 64 bits for n = " +
                std::to_string(lines));
  }
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= (std::uint64_t{1} << lines); ++k) f *= k;
  return f;
}

std::uint64_t rank(const TruthVector& p) {
  const std::size_t size = p.size();
  if (p.lines() > kMaxRankLines) {
    throw Error("rank is defined for n <= 4, got n = " +
                std::to_string(p.lines()));
  }
  // Lehmer digit i counts later entries smaller than p[i]; weight (size-1-i)!.
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < size; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < size; ++j) smaller += p[j] < p[i];
    r = r * (size - i) + smaller;
  }
  return r;
}

TruthVector unrank(std::uint64_t r, int lines) {
  const std::uint64_t order = group_order(lines);
  if (r >= order) {
    throw Error("rank " + std::to_string(r) + " out of range [0, " +
                std::to_string(order) + ")");
  }
  const std::size_t size = std::size_t{1} << lines;
  std::vector<Value> digits(size);
  for (std::size_t k = 1; k <= size; ++k) {
    digits[size - k] = static_cast<Value>(r % k);
    r /= k;
  }
  std::vector<Value> pool(size);
  for (std::size_t i = 0; i < size; ++i) pool[i] = static_cast<Value>(i);
  std::vector<Value> e(size);
  for (std::size_t i = 0; i < size; ++i) {
    e[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return TruthVector::from_entries(std::move(e));
}

}  // namespace revsynth
