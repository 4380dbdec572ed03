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
#include <iosfwd>
#include <optional>
#include <vector>

#include "revsynth/generator_set.hpp"
#include "revsynth/histogram.hpp"
#include "revsynth/truth_vector.hpp"

namespace revsynth {

/// Largest n for which the full Cayley graph ((2^n)! vertices) is explored.
/// n = 4 would mean 16! ~ 2.09e13 vertices.
inline constexpr int kMaxBfsLines = 3;

struct DistanceHistogram {
  GeneratorFamily family;
  int lines;
  Histogram counts;

  std::size_t diameter() const { return counts.max_key(); }
  double average() const { return counts.mean(); }
  std::uint64_t total() const { return counts.total(); }
};

/**
 * Single-source BFS from the identity over the Cayley graph of S_{2^n} with
 * the given generators. Neighbors of g are c . g for each generator c, in
 * generator order. Vertices are indexed by Lehmer rank.
 */
class BfsTable {
 public:
  static constexpr std::uint8_t kUnreached = 0xFF;
  static constexpr std::uint32_t kNoParent = 0xFFFFFFFF;

  explicit BfsTable(const GeneratorSet& generators);

  const GeneratorSet& generators() const { return generators_; }
  int lines() const { return generators_.lines(); }
  std::uint64_t order() const { return distance_.size(); }

  std::uint8_t distance(std::uint64_t rank) const { return distance_[rank]; }
  std::uint8_t distance(const TruthVector& p) const;
  const std::vector<std::uint8_t>& distances() const { return distance_; }

  /// BFS-tree parent rank and the generator index leading to `rank`.
  std::uint32_t parent(std::uint64_t rank) const { return parent_[rank]; }
  std::uint16_t via(std::uint64_t rank) const { return via_[rank]; }

  /// Vertices from the identity to `rank` along the BFS tree.
  std::vector<std::uint64_t> path_from_identity(std::uint64_t rank) const;

  DistanceHistogram histogram() const;

 private:
  GeneratorSet generators_;
  std::vector<std::uint8_t> distance_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> via_;
};

/// Rank of c . g for a vertex given by rank.
std::uint64_t neighbor_rank(const GeneratorSet& generators,
                            std::uint64_t rank, std::size_t generator);

DistanceHistogram bfs_histogram(const GeneratorSet& generators);

/// BFS distance from the identity, i.e. the optimal gate count over the
/// generator library.
std::size_t distance(const TruthVector& p, const GeneratorSet& generators);

struct BipartiteResult {
  bool bipartite;
  /// Odd closed walk starting and ending at the identity when not bipartite.
  std::vector<TruthVector> odd_walk;
  /// Generator index for each step of the walk.
  std::vector<std::size_t> walk_generators;
};

/// 2-colors the graph by BFS level parity; the first edge inside a level
/// yields an odd closed walk through the BFS tree.
BipartiteResult bipartite_check(const BfsTable& table);
BipartiteResult bipartite_check(const GeneratorSet& generators);

/// Checks d_H(x, id)/2 <= d(x, id) < d_H(x, id) and d(x) = parity(x) mod 2
/// over every non-identity vertex.
struct HammingSandwichReport {
  std::uint64_t vertices_checked = 0;
  std::uint64_t lower_violations = 0;
  std::uint64_t upper_violations = 0;
  std::uint64_t parity_violations = 0;
  /// min/max of d - d_H/2 and of d_H - d.
  double min_lower_slack = 0;
  double max_lower_slack = 0;
  std::int64_t min_upper_slack = 0;
  std::int64_t max_upper_slack = 0;

  bool holds() const {
    return lower_violations == 0 && upper_violations == 0;
  }
};

HammingSandwichReport hamming_sandwich_sweep(const BfsTable& table);

/// 16-byte header ("CAYLEYD1", n, 'I'|'H', 6 zero bytes) followed by one
/// u8 distance per vertex in rank order.
void write_distance_dump(std::ostream& out, const BfsTable& table);

}  // namespace revsynth
