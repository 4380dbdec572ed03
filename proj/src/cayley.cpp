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

#include "revsynth/cayley.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

void check_bfs_lines(int lines) {
  if (lines < 1 || lines > kMaxBfsLines) {
    std::string msg = "Cayley BFS is limited to n <= " +
                      std::to_string(kMaxBfsLines) + ", got n = " +
                      std::to_string(lines);
    if (lines == 4) msg += " (16! = 20922789888000 vertices)";
    throw Error(msg);
  }
}

}  // namespace

std::uint64_t neighbor_rank(const GeneratorSet& generators,
                            std::uint64_t rank, std::size_t generator) {
  const TruthVector g = unrank(rank, generators.lines());
  return revsynth::rank(compose(generators[generator].perm, g));
}

BfsTable::BfsTable(const GeneratorSet& generators) : generators_(generators) {
  check_bfs_lines(generators.lines());
  const std::uint64_t n_vertices = group_order(generators.lines());
  const std::size_t size = std::size_t{1} << generators.lines();
  distance_.assign(n_vertices, kUnreached);
  parent_.assign(n_vertices, kNoParent);
  via_.assign(n_vertices, 0);

  // Generators as raw lookup tables to avoid revalidating every product.
  std::vector<std::vector<Value>> tables;
  for (const Generator& gen : generators_) {
    tables.emplace_back(gen.perm.begin(), gen.perm.end());
  }

  std::vector<std::uint32_t> frontier{
      static_cast<std::uint32_t>(rank(identity(generators.lines())))};
  distance_[frontier.front()] = 0;
  std::vector<Value> product(size);
  for (std::uint8_t level = 0; !frontier.empty(); ++level) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t r : frontier) {
      const TruthVector g = unrank(r, generators.lines());
      for (std::size_t c = 0; c < tables.size(); ++c) {
        for (std::size_t i = 0; i < size; ++i) product[i] = tables[c][g[i]];
        const auto nr = static_cast<std::uint32_t>(
            rank(TruthVector::from_entries(product)));
        if (distance_[nr] != kUnreached) continue;
        distance_[nr] = static_cast<std::uint8_t>(level + 1);
        parent_[nr] = r;
        via_[nr] = static_cast<std::uint16_t>(c);
        next.push_back(nr);
      }
    }
    frontier = std::move(next);
  }
}

std::uint8_t BfsTable::distance(const TruthVector& p) const {
  if (p.lines() != lines()) {
    throw Error("vertex has " + std::to_string(p.lines()) +
                " lines, graph has " + std::to_string(lines()));
  }
  return distance_[rank(p)];
}

std::vector<std::uint64_t> BfsTable::path_from_identity(
    std::uint64_t rank) const {
  std::vector<std::uint64_t> path;
  for (std::uint64_t r = rank;; r = parent_[r]) {
    path.push_back(r);
    if (parent_[r] == kNoParent) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

DistanceHistogram BfsTable::histogram() const {
  DistanceHistogram h{generators_.family(), lines(), {}};
  for (std::uint8_t d : distance_) {
    if (d == kUnreached) throw std::logic_error("Cayley graph not connected");
    h.counts.add(d);
  }
  return h;
}

DistanceHistogram bfs_histogram(const GeneratorSet& generators) {
  return BfsTable(generators).histogram();
}

std::size_t distance(const TruthVector& p, const GeneratorSet& generators) {
  return BfsTable(generators).distance(p);
}

BipartiteResult bipartite_check(const BfsTable& table) {
  const GeneratorSet& gens = table.generators();
  for (std::uint64_t u = 0; u < table.order(); ++u) {
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const std::uint64_t v = neighbor_rank(gens, u, c);
      if (table.distance(u) != table.distance(v)) continue;
      // identity -> u, edge u -> v, then v -> identity.
      const std::vector<std::uint64_t> to_u = table.path_from_identity(u);
      const std::vector<std::uint64_t> to_v = table.path_from_identity(v);
      BipartiteResult result{false, {}, {}};
      for (std::uint64_t r : to_u) {
        result.odd_walk.push_back(unrank(r, table.lines()));
      }
      for (std::size_t i = 1; i < to_u.size(); ++i) {
        result.walk_generators.push_back(table.via(to_u[i]));
      }
      result.walk_generators.push_back(c);
      for (std::size_t i = to_v.size(); i-- > 0;) {
        result.odd_walk.push_back(unrank(to_v[i], table.lines()));
        if (i > 0) result.walk_generators.push_back(table.via(to_v[i]));
      }
      return result;
    }
  }
  return {true, {}, {}};
}

BipartiteResult bipartite_check(const GeneratorSet& generators) {
  return bipartite_check(BfsTable(generators));
}

HammingSandwichReport hamming_sandwich_sweep(const BfsTable& table) {
  HammingSandwichReport report;
  report.min_lower_slack = std::numeric_limits<double>::infinity();
  report.max_lower_slack = -std::numeric_limits<double>::infinity();
  report.min_upper_slack = std::numeric_limits<std::int64_t>::max();
  report.max_upper_slack = std::numeric_limits<std::int64_t>::min();
  const TruthVector id = identity(table.lines());
  for (std::uint64_t r = 0; r < table.order(); ++r) {
    const TruthVector x = unrank(r, table.lines());
    if (x.is_identity()) continue;
    ++report.vertices_checked;
    const auto d = static_cast<std::int64_t>(table.distance(r));
    const auto dh = static_cast<std::int64_t>(hamming(x, id));
    const double lower = static_cast<double>(d) - static_cast<double>(dh) / 2;
    const std::int64_t upper = dh - d;
    if (lower < 0) ++report.lower_violations;
    if (upper <= 0) ++report.upper_violations;
    if ((d % 2 == 1) != is_odd(x)) ++report.parity_violations;
    report.min_lower_slack = std::min(report.min_lower_slack, lower);
    report.max_lower_slack = std::max(report.max_lower_slack, lower);
    report.min_upper_slack = std::min(report.min_upper_slack, upper);
    report.max_upper_slack = std::max(report.max_upper_slack, upper);
  }
  return report;
}

void write_distance_dump(std::ostream& out, const BfsTable& table) {
  std::array<char, 16> header{'C', 'A', 'Y', 'L', 'E', 'Y', 'D', '1'};
  header[8] = static_cast<char>(table.lines());
  header[9] = graph_label(table.generators().family()).front();
  out.write(header.data(), header.size());
  out.write(reinterpret_cast<const char*>(table.distances().data()),
            static_cast<std::streamsize>(table.distances().size()));
}

}  // namespace revsynth
