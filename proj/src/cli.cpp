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

#include "revsynth/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "revsynth/cayley.hpp"
#include "revsynth/cost.hpp"
#include "revsynth/decompose.hpp"
#include "revsynth/distribution.hpp"
#include "revsynth/error.hpp"
#include "revsynth/text_format.hpp"
#include "revsynth/unitary.hpp"

namespace revsynth::cli {

namespace {

constexpr const char* kFormatsHelp = R"(File formats

Truth vector (.tv): optional comment lines starting with '#', then 2^n
decimal integers separated by whitespace or newlines. n is inferred from
the count, which must be a power of two >= 2, and the values must be a
permutation of 0 .. 2^n-1. Line a is the least significant bit.

Circuit (.tfc):
    # comment
    .n 3
    t3 b,c,a
    t2 a',b
    t1 c
A line t<k> is a gate of size k (controls + 1). Operands are comma
separated, controls first and target last. A trailing apostrophe marks a
negative control. Lines are named a, b, c, ... with a = line 0 (LSB).
Duplicate operands, unknown line names and an apostrophe on the target are
rejected.

Exit codes: 0 success, 1 domain error, 2 usage error.)";

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string algorithm = "mmd";
  std::string input;
  std::string output;
  std::string circuit;
  std::string direction = "to-identity";
  std::string garbage = "0";
  std::string strategy = "zeroed";
  std::string set = "I";
  std::string csv;
  std::string dump;
  std::string format = "text";
  int lines = 3;
  bool verify = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << data;
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
  } else {
    write_file(path, data);
  }
}

OutputFormat parse_format(const std::string& f) {
  if (f == "text") return OutputFormat::Text;
  if (f == "json") return OutputFormat::Json;
  throw Error("unknown format '" + f + "' (expected text or json)");
}

std::string two_decimals(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
  const Algorithm algo = parse_algorithm(cfg.algorithm);
  if (cfg.direction != "to-identity" && cfg.direction != "from-identity") {
    throw Error("--direction must be to-identity or from-identity");
  }
  const TruthVector f = parse_truth_vector(read_file(cfg.input));
  const Circuit to_identity = synthesize(f, algo);
  if (!apply_circuit(to_identity, f).is_identity()) {
    throw std::logic_error("synthesized cascade does not map input to identity");
  }
  const bool reversed = cfg.direction == "from-identity";
  const Circuit result = reversed ? invert_circuit(to_identity) : to_identity;
  std::string text = "# " + std::string(algorithm_name(algo)) + ", " +
                     cfg.direction + ", " + std::to_string(result.size()) +
                     " gates\n";
  text += format_circuit(result);
  emit(cfg.output, text, out);
  return kExitOk;
}

int cmd_apply(const RunConfig& cfg, std::ostream& out) {
  const Circuit c = parse_circuit(read_file(cfg.circuit));
  const TruthVector tv = cfg.input.empty()
                             ? identity(c.lines())
                             : parse_truth_vector(read_file(cfg.input));
  out << format_truth_vector(apply_circuit(c, tv));
  return kExitOk;
}

int cmd_cost(const RunConfig& cfg, std::ostream& out) {
  const Circuit c = parse_circuit(read_file(cfg.circuit));
  const CostReport report = cost_report(c, parse_policy(cfg.garbage));
  if (parse_format(cfg.format) == OutputFormat::Json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Algorithm algo = parse_algorithm(cfg.algorithm);
  const OutputFormat format = parse_format(cfg.format);
  const Histogram h = gate_count_distribution(cfg.lines, algo);
  if (!cfg.csv.empty()) write_file(cfg.csv, h.to_csv("gates,count"));
  if (format == OutputFormat::Json) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t k = 0; k <= h.max_key(); ++k) {
      counts[std::to_string(k)] = h.count(k);
    }
    out << nlohmann::json{{"algorithm", algorithm_name(algo)},
                          {"n", cfg.lines},
                          {"total", h.total()},
                          {"max", h.max_key()},
                          {"average", h.mean()},
                          {"counts", counts}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "algorithm " << algorithm_name(algo) << ", n = " << cfg.lines << ", "
      << h.total() << " permutations\n";
  out << "gates  count\n";
  for (std::size_t k = h.max_key() + 1; k-- > 0;) {
    out << std::setw(5) << k << "  " << h.count(k) << '\n';
  }
  out << "average " << two_decimals(h.mean()) << '\n';
  return kExitOk;
}

int cmd_bfs(const RunConfig& cfg, std::ostream& out) {
  GeneratorFamily family;
  if (cfg.set == "I") {
    family = GeneratorFamily::GeneralizedToffoli;
  } else if (cfg.set == "H") {
    family = GeneratorFamily::MultipleControl;
  } else {
    throw Error("--set must be I or H");
  }
  const OutputFormat format = parse_format(cfg.format);
  const BfsTable table(GeneratorSet(family, cfg.lines));
  const DistanceHistogram h = table.histogram();
  const bool bipartite = bipartite_check(table).bipartite;
  if (!cfg.csv.empty()) write_file(cfg.csv, h.counts.to_csv("distance,count"));
  if (!cfg.dump.empty()) {
    std::ofstream dump(cfg.dump, std::ios::binary);
    if (!dump) throw Error("cannot write '" + cfg.dump + "'");
    write_distance_dump(dump, table);
  }
  if (format == OutputFormat::Json) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t k = 0; k <= h.diameter(); ++k) {
      counts[std::to_string(k)] = h.counts.count(k);
    }
    out << nlohmann::json{{"set", cfg.set},
                          {"n", cfg.lines},
                          {"vertices", h.total()},
                          {"degree", table.generators().size()},
                          {"diameter", h.diameter()},
                          {"average", h.average()},
                          {"bipartite", bipartite},
                          {"counts", counts}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "Cayley graph " << cfg.set << "_" << cfg.lines << ": " << h.total()
      << " vertices, degree " << table.generators().size() << '\n';
  out << "distance  count\n";
  for (std::size_t k = h.diameter() + 1; k-- > 0;) {
    out << std::setw(8) << k << "  " << h.counts.count(k) << '\n';
  }
  out << "diameter " << h.diameter() << '\n';
  out << "average " << two_decimals(h.average()) << '\n';
  out << "bipartite " << (bipartite ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Circuit c = parse_circuit(read_file(cfg.circuit));
  const AncillaCircuit impl = decompose_circuit(c, parse_strategy(cfg.strategy));
  std::string text;
  if (impl.ancilla_lines > 0) {
    text += "# ancilla lines " + std::string(1, line_name(impl.principal_lines)) +
            ".." +
            std::string(1, line_name(impl.total_lines() - 1)) + " (" +
            std::string(ancilla_mode_name(impl.mode)) + ")\n";
  }
  if (cfg.verify) {
    const EquivalenceResult r = verify_equivalence(c, impl);
    if (!r.equivalent) {
      const Counterexample& ce = *r.counterexample;
      err << "verification failed: input " << ce.input << " expected "
          << ce.expected << " got " << ce.actual << '\n';
      return kExitDomainError;
    }
    text += "# verified: " + std::to_string(r.inputs_checked) +
            " inputs, ancilla=" + std::string(ancilla_mode_name(impl.mode)) +
            "\n";
  }
  text += format_circuit(impl.gates);
  emit(cfg.output, text, out);
  return kExitOk;
}

int cmd_verify_elementary(std::ostream& out) {
  bool all = true;
  for (const ElementaryCheck& c : verify_elementary()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  residual "
        << std::scientific << std::setprecision(2) << c.residual << " (tol "
        << c.tolerance << ")" << std::defaultfloat << '\n';
    all = all && c.passed;
  }
  return all ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reversible circuit synthesis and Cayley graph analysis",
               "revsynth"};
  app.footer(kFormatsHelp);
  app.set_version_flag("--version", "revsynth 0.1.0");
  app.require_subcommand(1);

  RunConfig cfg;
  const std::vector<std::string> algos{"mmd", "hc-right", "hc-left", "hc-bi"};

  auto* synth = app.add_subcommand("synth", "Synthesize a truth vector");
  synth->add_option("--algo", cfg.algorithm, "mmd | hc-right | hc-left | hc-bi")
      ->required()
      ->check(CLI::IsMember(algos));
  synth->add_option("--in", cfg.input, "Truth-vector file")->required();
  synth->add_option("--out", cfg.output, "Circuit file (default stdout)");
  synth->add_option("--direction", cfg.direction,
                    "to-identity (default) or from-identity")
      ->check(CLI::IsMember({"to-identity", "from-identity"}));

  auto* apply = app.add_subcommand("apply", "Apply a circuit to a truth vector");
  apply->add_option("--circuit", cfg.circuit, "Circuit file")->required();
  apply->add_option("--in", cfg.input, "Truth-vector file (default identity)");

  auto* cost = app.add_subcommand("cost", "Gate count and quantum cost");
  cost->add_option("--circuit", cfg.circuit, "Circuit file")->required();
  cost->add_option("--garbage", cfg.garbage, "0 | 1 | n-3")
      ->check(CLI::IsMember({"0", "1", "n-3"}));
  cost->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* enumerate =
      app.add_subcommand("enumerate", "Gate-count distribution over S_{2^n}");
  enumerate->add_option("--n", cfg.lines, "Line count (1..3)");
  enumerate->add_option("--algo", cfg.algorithm, "mmd | hc-right | hc-left | hc-bi")
      ->required()
      ->check(CLI::IsMember(algos));
  enumerate->add_option("--csv", cfg.csv, "Write histogram CSV here");
  enumerate->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* bfs = app.add_subcommand("bfs", "Exact BFS over a Cayley graph");
  bfs->add_option("--set", cfg.set, "I (generalized Toffoli) | H (multiple control)")
      ->required()
      ->check(CLI::IsMember({"I", "H"}));
  bfs->add_option("--n", cfg.lines, "Line count (1..3)");
  bfs->add_option("--csv", cfg.csv, "Write histogram CSV here");
  bfs->add_option("--dump", cfg.dump, "Write binary distance table here");
  bfs->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* decompose =
      app.add_subcommand("decompose", "Expand large gates into Toffoli networks");
  decompose->add_option("--circuit", cfg.circuit, "Circuit file")->required();
  decompose->add_option("--strategy", cfg.strategy, "zeroed | borrowed | one-garbage")
      ->check(CLI::IsMember({"zeroed", "borrowed", "one-garbage"}));
  decompose->add_option("--out", cfg.output, "Circuit file (default stdout)");
  decompose->add_flag("--verify", cfg.verify, "Exhaustively verify the expansion");

  auto* elementary = app.add_subcommand(
      "verify-elementary", "Check the controlled-V identities numerically");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(cfg, out);
    if (apply->parsed()) return cmd_apply(cfg, out);
    if (cost->parsed()) return cmd_cost(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (bfs->parsed()) return cmd_bfs(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out, err);
    if (elementary->parsed()) return cmd_verify_elementary(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace revsynth::cli
