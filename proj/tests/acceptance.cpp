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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion 4   run one

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "revsynth/cayley.hpp"
#include "revsynth/cli.hpp"
#include "revsynth/cost.hpp"
#include "revsynth/decompose.hpp"
#include "revsynth/distribution.hpp"
#include "revsynth/synthesis.hpp"
#include "revsynth/text_format.hpp"
#include "revsynth/unitary.hpp"

namespace revsynth {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Collects failed sub-checks; a criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

TruthVector tv(std::vector<Value> e) {
  return TruthVector::from_entries(std::move(e));
}

std::string fmt(double v, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string hist_str(const Histogram& h) {
  std::string s;
  for (std::size_t k = h.max_key() + 1; k-- > 0;) {
    s += (s.empty() ? "" : " ") + std::to_string(k) + ":" +
         std::to_string(h.count(k));
  }
  return s;
}

Histogram from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
  Histogram h;
  for (const auto& [k, c] : pairs) h.add(static_cast<std::size_t>(k), c);
  return h;
}

TruthVector random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Value> e(std::size_t{1} << n);
  std::iota(e.begin(), e.end(), Value{0});
  std::shuffle(e.begin(), e.end(), rng);
  return tv(std::move(e));
}

const BfsTable& table_i3() {
  static const BfsTable t(enumerate_generalized_toffoli(3));
  return t;
}

const BfsTable& table_h3() {
  static const BfsTable t(enumerate_multiple_control(3));
  return t;
}

void criterion_1(Checks& c) {
  const TruthVector f = tv({1, 0, 3, 2, 5, 7, 4, 6});
  SynthesisTrace trace;
  const auto start = Clock::now();
  const Circuit circuit = mmd_synthesize(f, &trace);
  const double ms = ms_since(start);

  const Circuit reversed = invert_circuit(circuit);
  c.expect(format_circuit(reversed) ==
               ".n 3\nt3 b,c,a\nt3 a,c,b\nt3 b,c,a\nt1 a\n",
           "reversed cascade differs from T(b,c;a) T(a,c;b) T(b,c;a) NOT(a)");
  const std::vector<TruthVector> columns{
      tv({0, 1, 2, 3, 4, 6, 5, 7}), tv({0, 1, 2, 3, 4, 7, 5, 6}),
      tv({0, 1, 2, 3, 4, 5, 7, 6}), identity(3)};
  bool trace_ok = trace.entries.size() == columns.size();
  for (std::size_t k = 0; trace_ok && k < columns.size(); ++k) {
    trace_ok = trace.entries[k].after == columns[k];
  }
  c.expect(trace_ok, "intermediate specifications differ");

  // Same result through the command line.
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / ("revsynth_acc_" +
                           std::to_string(std::random_device{}()) + ".tv");
  std::ofstream(path) << format_truth_vector(f);
  std::ostringstream out, err;
  const int code = cli::run(
      {"synth", "--algo", "mmd", "--in", path.string()}, out, err);
  std::filesystem::remove(path);
  c.expect(code == 0 && out.str() == "# mmd, to-identity, 4 gates\n" +
                                         format_circuit(circuit),
           "synth command output differs");

  c.expect(ms < 1.0, "runtime " + fmt(ms, 3) + " ms >= 1 ms");
  c.note("4 gates, 5 columns, " + fmt(ms, 3) + " ms");
}

void criterion_2(Checks& c) {
  const TruthVector f = tv({7, 4, 1, 0, 3, 2, 6, 5});
  SynthesisTrace trace;
  const auto start = Clock::now();
  const Circuit circuit = hc_synthesize(f, ScanOrder::Right, &trace);
  const double ms = ms_since(start);

  c.expect(format_circuit(circuit) ==
               ".n 3\nt3 a,c,b\nt3 b,c',a\nt3 a,c',b\nt3 a,b',c\n"
               "t3 a',c',b\nt3 a',b',c\nt3 b,c',a\nt3 b',c',a\n",
           "gate list differs");
  const std::vector<TruthVector> rows{
      tv({5, 4, 1, 0, 3, 2, 6, 7}), tv({5, 4, 1, 0, 2, 3, 6, 7}),
      tv({5, 4, 3, 0, 2, 1, 6, 7}), tv({1, 4, 3, 0, 2, 5, 6, 7}),
      tv({1, 4, 3, 2, 0, 5, 6, 7}), tv({1, 0, 3, 2, 4, 5, 6, 7}),
      tv({1, 0, 2, 3, 4, 5, 6, 7}), identity(3)};
  bool trace_ok = trace.entries.size() == rows.size();
  for (std::size_t k = 0; trace_ok && k < rows.size(); ++k) {
    trace_ok = trace.entries[k].after == rows[k];
  }
  c.expect(trace_ok, "trace rows differ");
  c.expect(ms < 1.0, "runtime " + fmt(ms, 3) + " ms >= 1 ms");
  c.note(std::to_string(circuit.size()) + " gates, " + fmt(ms, 3) + " ms");
}

void criterion_3(Checks& c) {
  struct Case {
    const char* algo;
    std::vector<Value> f;
    std::size_t expected;
  };
  const std::vector<Case> cases{
      {"mmd", {7, 1, 4, 3, 0, 2, 6, 5}, 17},
      {"mmd", {15, 1, 12, 3, 5, 6, 8, 7, 0, 10, 13, 9, 2, 4, 14, 11}, 49},
      {"hc-right", {5, 2, 7, 4, 1, 6, 3, 0}, 17},
      {"hc-right", {5, 10, 7, 4, 9, 14, 11, 8, 13, 2, 15, 12, 1, 6, 3, 0}, 49},
      {"hc-left", {7, 4, 1, 6, 3, 0, 5, 2}, 17},
      {"hc-left", {15, 12, 9, 14, 3, 0, 13, 2, 7, 4, 1, 6, 11, 8, 5, 10}, 49}};
  std::string got;
  for (const Case& k : cases) {
    const std::size_t n = synthesize(tv(k.f), parse_algorithm(k.algo)).size();
    c.expect(n == k.expected, std::string(k.algo) + " gave " +
                                  std::to_string(n) + ", expected " +
                                  std::to_string(k.expected));
    got += (got.empty() ? "" : " ") + std::to_string(n);
  }
  c.note("counts " + got);

  std::vector<Value> e(8);
  std::iota(e.begin(), e.end(), Value{0});
  do {
    if (mmd_synthesize(tv(e)).size() == 17) {
      c.note("the only 17-gate mmd input at n = 3 is " +
             format_truth_vector(tv(e)).substr(0, 15));
    }
  } while (std::next_permutation(e.begin(), e.end()));
}

void criterion_4(Checks& c) {
  const auto start = Clock::now();
  const Histogram algorithm_1 = from_pairs(
      {{17, 1},    {16, 14},   {15, 92},   {14, 380},  {13, 1113}, {12, 2468},
       {11, 4311}, {10, 6083}, {9, 7044},  {8, 6754},  {7, 5379},  {6, 3549},
       {5, 1922},  {4, 839},   {3, 286},   {2, 72},    {1, 12},    {0, 1}});
  const Histogram bidirectional = from_pairs(
      {{14, 9},    {13, 111},  {12, 581},  {11, 1946}, {10, 4349},
       {9, 6917},  {8, 8255},  {7, 7662},  {6, 5546},  {5, 3088},
       {4, 1329},  {3, 424},   {2, 90},    {1, 12},    {0, 1}});

  const Histogram mmd = gate_count_distribution(3, Algorithm::Mmd);
  const Histogram right = gate_count_distribution(3, Algorithm::HcRight);
  const Histogram bi = gate_count_distribution(3, Algorithm::HcBidirectional);
  const double ms = ms_since(start);

  c.expect(mmd == algorithm_1, "mmd histogram " + hist_str(mmd));
  c.expect(std::abs(mmd.mean() - 8.67) <= 0.005,
           "mmd average " + fmt(mmd.mean(), 4));
  c.expect(right == algorithm_1, "hc-right histogram " + hist_str(right));
  c.expect(bi == bidirectional, "hc-bi histogram " + hist_str(bi));
  c.expect(std::abs(bi.mean() - 7.71) <= 0.005,
           "hc-bi average " + fmt(bi.mean(), 4));
  c.expect(ms < 60000, "runtime " + fmt(ms / 1000) + " s");
  c.note("averages " + fmt(mmd.mean(), 4) + " / " + fmt(bi.mean(), 4) + ", " +
         fmt(ms / 1000) + " s");
}

void criterion_5(Checks& c) {
  const auto start = Clock::now();
  const DistanceHistogram h = bfs_histogram(enumerate_generalized_toffoli(3));
  const double ms = ms_since(start);
  const Histogram optimal = from_pairs({{8, 577},
                                        {7, 10253},
                                        {6, 17049},
                                        {5, 8921},
                                        {4, 2780},
                                        {3, 625},
                                        {2, 102},
                                        {1, 12},
                                        {0, 1}});
  c.expect(h.counts == optimal, "histogram " + hist_str(h.counts));
  c.expect(h.diameter() == 8, "diameter " + std::to_string(h.diameter()));
  c.expect(h.counts.count(1) == 12, "level-1 count");
  c.expect(std::abs(h.average() - 5.63) <= 0.005,
           "average " + fmt(h.average(), 4) + " outside 5.63 +- 0.005");
  c.expect(ms < 30000, "runtime " + fmt(ms / 1000) + " s");
  c.note("diameter " + std::to_string(h.diameter()) + ", " + fmt(ms / 1000) +
         " s");
}

void criterion_6(Checks& c) {
  const auto start = Clock::now();
  const BfsTable& t = table_h3();
  const DistanceHistogram h = t.histogram();
  const BipartiteResult bip = bipartite_check(t);
  std::uint64_t bad_edges = 0;
  for (std::uint64_t u = 0; u < t.order(); ++u) {
    for (std::size_t g = 0; g < t.generators().size(); ++g) {
      const std::uint64_t v = neighbor_rank(t.generators(), u, g);
      if (std::abs(int{t.distance(u)} - int{t.distance(v)}) != 1) ++bad_edges;
    }
  }
  const HammingSandwichReport sandwich = hamming_sandwich_sweep(t);
  const double ms = ms_since(start);

  c.expect(bip.bipartite && bad_edges == 0,
           "parity layering broken on " + std::to_string(bad_edges) + " edges");
  c.expect(h.diameter() >= 12 && h.diameter() <= 17,
           "diameter " + std::to_string(h.diameter()));
  c.expect(t.distance(reverse_perm(3)) >= 12, "distance of the reversal");
  c.expect(sandwich.holds() && sandwich.vertices_checked == 40319,
           "sandwich violations " +
               std::to_string(sandwich.lower_violations) + "/" +
               std::to_string(sandwich.upper_violations));
  const Histogram fixture = from_pairs(
      {{12, 1},    {11, 36},    {10, 430},  {9, 2408},  {8, 7347},
       {7, 11756}, {6, 10388},  {5, 5472},  {4, 1903},  {3, 476},
       {2, 90},    {1, 12},     {0, 1}});
  c.expect(h.counts == fixture, "histogram drifted: " + hist_str(h.counts));
  c.expect(ms < 30000, "runtime " + fmt(ms / 1000) + " s");
  c.note("diameter " + std::to_string(h.diameter()) + ", average " +
         fmt(h.average(), 4) + ", " + fmt(ms / 1000) + " s");
}

void criterion_7(Checks& c) {
  const std::vector<TruthVector> vertices{tv({3, 1, 0, 2}), tv({3, 1, 2, 0}),
                                          tv({1, 3, 0, 2}), tv({0, 2, 1, 3}),
                                          tv({0, 2, 3, 1})};
  const std::vector<TruthVector> moves{tv({0, 1, 3, 2}), tv({1, 0, 3, 2}),
                                       tv({2, 3, 0, 1}), tv({0, 1, 3, 2}),
                                       tv({2, 3, 0, 1})};
  const GeneratorSet ci2 = enumerate_generalized_toffoli(2);
  bool walk = true;
  for (std::size_t i = 0; i < 5; ++i) {
    bool member = false;
    for (const Generator& g : ci2) member = member || g.perm == moves[i];
    const TruthVector& next = vertices[(i + 1) % 5];
    // The listed moves permute positions; inverting every vertex turns the
    // walk into one under left multiplication by the same generators.
    walk = walk && member && compose(vertices[i], moves[i]) == next &&
           compose(moves[i], inverse(vertices[i])) == inverse(next);
  }
  c.expect(walk, "listed closed walk does not close in I2");
  const BipartiteResult i2 = bipartite_check(ci2);
  c.expect(!i2.bipartite && i2.walk_generators.size() % 2 == 1,
           "I2 reported bipartite");
  c.expect(bipartite_check(enumerate_multiple_control(2)).bipartite,
           "H2 reported non-bipartite");
  c.note("closed 5-walk; I2 odd walk of length " +
         std::to_string(i2.walk_generators.size()));
}

bool check_cascade(const TruthVector& f, const Circuit& circuit,
                   Algorithm algo) {
  const int n = f.lines();
  if (circuit.size() > synthesis_gate_bound(n)) return false;
  for (const Gate& g : circuit) {
    const bool member = algo == Algorithm::Mmd ? g.is_generalized_toffoli()
                                               : g.is_full_control();
    if (!member) return false;
  }
  return apply_circuit(circuit, f).is_identity();
}

void criterion_8(Checks& c) {
  const Algorithm algos[] = {Algorithm::Mmd, Algorithm::HcRight,
                             Algorithm::HcLeft, Algorithm::HcBidirectional};
  std::uint64_t failures = 0, checked = 0, below_bfs = 0;
  std::vector<Value> e(8);
  std::iota(e.begin(), e.end(), Value{0});
  do {
    const TruthVector f = tv(e);
    const std::uint8_t di = table_i3().distance(f);
    const std::uint8_t dh = table_h3().distance(f);
    for (Algorithm a : algos) {
      const Circuit circuit = synthesize(f, a);
      ++checked;
      if (!check_cascade(f, circuit, a)) ++failures;
      if (circuit.size() < (a == Algorithm::Mmd ? di : dh)) ++below_bfs;
    }
  } while (std::next_permutation(e.begin(), e.end()));

  std::mt19937_64 rng(20240611);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 10000; ++trial) {
      const TruthVector f = random_permutation(n, rng);
      for (Algorithm a : algos) {
        ++checked;
        if (!check_cascade(f, synthesize(f, a), a)) ++failures;
      }
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " bad cascades");
  c.expect(below_bfs == 0,
           std::to_string(below_bfs) + " cascades shorter than BFS distance");
  c.note(std::to_string(checked) + " cascades checked");
}

void criterion_9(Checks& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(99);
  std::uint64_t verified = 0;
  for (int s = 4; s <= 10; ++s) {
    for (int trial = 0; trial < 50; ++trial) {
      const int lines = s + static_cast<int>(rng() % 2);
      std::vector<Line> order(lines);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::uint32_t controls = 0;
      for (int i = 1; i < s; ++i) controls |= std::uint32_t{1} << order[i];
      const Gate g = Gate::from_masks(
          lines, order[0], controls,
          static_cast<std::uint32_t>(rng()) & controls);
      const std::string name = format_gate(g);

      const AncillaCircuit zeroed = ladder_zeroed(g);
      c.expect(zeroed.gates.size() == static_cast<std::size_t>(2 * s - 5),
               "zeroed ladder size for " + name);
      c.expect(verify_equivalence(g, zeroed).equivalent,
               "zeroed ladder for " + name);
      ++verified;
      if (s < 5) continue;
      const AncillaCircuit borrowed = ladder_borrowed(g);
      c.expect(borrowed.gates.size() == static_cast<std::size_t>(4 * (s - 3)),
               "borrowed ladder size for " + name);
      c.expect(verify_equivalence(g, borrowed).equivalent,
               "borrowed ladder for " + name);
      c.expect(verify_equivalence(g, split_one_borrowed(g)).equivalent,
               "split for " + name);
      c.expect(verify_equivalence(g, expand_one_garbage(g)).equivalent,
               "one-garbage expansion for " + name);
      verified += 3;
    }
    const Gate positive = Gate::from_masks(s, s - 1,
                                           (std::uint32_t{1} << (s - 1)) - 1);
    const std::uint64_t qc =
        circuit_cost(ladder_zeroed(positive).gates, GarbagePolicy::Zero)
            .quantum_cost;
    c.expect(qc == static_cast<std::uint64_t>(10 * s - 25),
             "zeroed ladder cost " + std::to_string(qc) + " at s = " +
                 std::to_string(s));
  }
  const double ms = ms_since(start);
  c.expect(ms < 120000, "runtime " + fmt(ms / 1000) + " s");
  c.note(std::to_string(verified) + " decompositions verified, " +
         fmt(ms / 1000) + " s");
}

void criterion_10(Checks& c) {
  double worst = 0;
  for (const ElementaryCheck& e : verify_elementary()) {
    c.expect(e.passed, e.name + " residual " + std::to_string(e.residual));
    worst = std::max(worst, e.residual);
  }
  const Eigen::Matrix2cd v = v_gate();
  const double vv = max_residual(v * v, x_power(1.0));
  c.expect(vv <= 1e-12, "V*V residual");
  const std::size_t toffoli = two_control_chain(v).size();
  c.expect(toffoli == 5 && toffoli == gate_cost(3, 0, GarbagePolicy::Zero),
           "Toffoli elementary count");
  std::ostringstream s;
  s << std::scientific << std::setprecision(1) << worst;
  c.note("max residual " + s.str());
}

void criterion_11(Checks& c) {
  using GP = GarbagePolicy;
  using GF = GeneratorFamily;
  c.expect(gate_cost(1, 0, GP::Zero) == 1, "NOT");
  c.expect(gate_cost(2, 0, GP::Zero) == 1, "CNOT");
  c.expect(gate_cost(3, 0, GP::Zero) == 5, "Toffoli");
  c.expect(gate_cost(3, 1, GP::Zero) == 5, "Toffoli, one negative");
  c.expect(gate_cost(3, 2, GP::Zero) == 7, "Toffoli, two negatives");
  for (int s = 4; s <= 12; ++s) {
    for (int m = 0; m < s; ++m) {
      c.expect(gate_cost(s, m, GP::Zero) ==
                   (std::uint64_t{1} << s) - 3 + 2 * static_cast<unsigned>(m),
               "size " + std::to_string(s) + ", m = " + std::to_string(m));
    }
  }
  c.expect(worst_case_qc(3, GF::GeneralizedToffoli, GP::Zero) == 85,
           "I/0 at n = 3");
  for (std::uint64_t n = 5; n <= 10; ++n) {
    const int ni = static_cast<int>(n);
    const std::uint64_t gc = (n - 1) * (std::uint64_t{1} << n) + 1;
    const std::string at = " at n = " + std::to_string(n);
    c.expect(worst_case_qc(ni, GF::GeneralizedToffoli, GP::Zero) ==
                 gc * ((std::uint64_t{1} << n) - 3), "I/0" + at);
    c.expect(worst_case_qc(ni, GF::GeneralizedToffoli, GP::One) ==
                 gc * (24 * n - 88), "I/1" + at);
    c.expect(worst_case_qc(ni, GF::GeneralizedToffoli, GP::NMinusThree) ==
                 gc * (10 * n - 25), "I/n-3" + at);
    for (int m = 0; m < ni; ++m) {
      c.expect(worst_case_qc(ni, GF::MultipleControl, GP::Zero, m) ==
                   gc * ((std::uint64_t{1} << n) - 3 + 2 * m), "H/0" + at);
    }
    c.expect(worst_case_qc(ni, GF::MultipleControl, GP::One) ==
                 gc * (24 * n - 86), "H/1" + at);
    c.expect(worst_case_qc(ni, GF::MultipleControl, GP::NMinusThree) ==
                 gc * (10 * n - 23), "H/n-3" + at);
  }
  c.note("I/0 n=3 -> " +
         std::to_string(worst_case_qc(3, GF::GeneralizedToffoli, GP::Zero)));
}

const std::vector<std::pair<const char*, std::function<void(Checks&)>>>&
criteria() {
  static const std::vector<std::pair<const char*, std::function<void(Checks&)>>>
      all{{"mmd worked example replay", criterion_1},
          {"hc-right worked example replay", criterion_2},
          {"worst-case permutations", criterion_3},
          {"exhaustive n = 3 distributions", criterion_4},
          {"BFS ground truth on I3", criterion_5},
          {"H3 bipartite, diameter and Hamming sandwich", criterion_6},
          {"odd closed walk in I2, H2 bipartite", criterion_7},
          {"synthesis correctness properties", criterion_8},
          {"decomposition equivalence", criterion_9},
          {"elementary identities", criterion_10},
          {"cost model", criterion_11}};
  return all;
}

bool run_one(std::size_t index) {
  const auto& [name, body] = criteria()[index - 1];
  Checks checks;
  const auto start = Clock::now();
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double ms = ms_since(start);
  std::cout << (checks.ok() ? "PASS" : "FAIL") << " criterion " << index
            << ": " << name << " [" << checks.summary() << "] ("
            << fmt(ms, 1) << " ms)" << std::endl;
  return checks.ok();
}

}  // namespace
}  // namespace revsynth

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  std::size_t criterion = 0;
  app.add_option("--criterion", criterion, "Run only this criterion (1-11)")
      ->check(CLI::Range(std::size_t{1}, revsynth::criteria().size()));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  if (criterion != 0) {
    ok = revsynth::run_one(criterion);
  } else {
    for (std::size_t i = 1; i <= revsynth::criteria().size(); ++i) {
      ok = revsynth::run_one(i) && ok;
    }
  }
  return ok ? 0 : 1;
}
