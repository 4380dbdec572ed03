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

#include "revsynth/unitary.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

using Complex = std::complex<double>;

QuantumGate controlled(const Eigen::Matrix2cd& op, Line control, Line target,
                       Polarity polarity = Polarity::Positive) {
  return {op, target, {{control, polarity}}};
}

Eigen::Matrix2cd pauli_x() { return x_power(1.0); }

bool controls_match(const QuantumGate& g, Eigen::Index basis) {
  for (const Control& c : g.controls) {
    const bool bit = (basis >> c.line) & 1;
    if (bit != (c.polarity == Polarity::Positive)) return false;
  }
  return true;
}

Eigen::MatrixXcd gate_matrix(int lines, const QuantumGate& g) {
  const Eigen::Index dim = Eigen::Index{1} << lines;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index tbit = Eigen::Index{1} << g.target;
  for (Eigen::Index col = 0; col < dim; ++col) {
    if (!controls_match(g, col)) {
      m(col, col) = 1.0;
      continue;
    }
    const int in = (col & tbit) ? 1 : 0;
    const Eigen::Index base = col & ~tbit;
    m(base, col) = g.op(0, in);
    m(base | tbit, col) = g.op(1, in);
  }
  return m;
}

ElementaryCheck check(std::string name, const Eigen::MatrixXcd& lhs,
                      const Eigen::MatrixXcd& rhs, double tolerance) {
  const double r = max_residual(lhs, rhs);
  return {std::move(name), r, tolerance, r <= tolerance};
}

}  // namespace

Eigen::Matrix2cd x_power(double t) {
  const Complex phase = std::polar(1.0, std::numbers::pi * t);
  Eigen::Matrix2cd plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  Eigen::Matrix2cd minus;
  minus << 0.5, -0.5, -0.5, 0.5;
  return plus + phase * minus;
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error("unitary must be square");
}

bool UnitaryMatrix::is_unitary(double tolerance) const {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return max_residual(m_ * m_.adjoint(), id) <= tolerance;
}

UnitaryMatrix build_unitary(int lines, std::span<const QuantumGate> gates) {
  if (lines < 1 || lines > UnitaryMatrix::kMaxLines) {
    throw Error("dense unitaries are built for 1 to 4 lines, got " +
                std::to_string(lines));
  }
  const Eigen::Index dim = Eigen::Index{1} << lines;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const QuantumGate& g : gates) {
    if (g.target < 0 || g.target >= lines) {
      throw Error("quantum gate target outside the register");
    }
    for (const Control& c : g.controls) {
      if (c.line < 0 || c.line >= lines || c.line == g.target) {
        throw Error("unsupported quantum gate control on line " +
                    std::to_string(c.line));
      }
    }
    u = gate_matrix(lines, g) * u;
  }
  return UnitaryMatrix(std::move(u));
}

double max_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<QuantumGate> doubly_controlled(const Eigen::Matrix2cd& op,
                                           Polarity first, Polarity second) {
  return {{op, 2, {{0, first}, {1, second}}}};
}

std::vector<QuantumGate> two_control_chain(const Eigen::Matrix2cd& root) {
  const Eigen::Matrix2cd x = pauli_x();
  return {controlled(root, 1, 2), controlled(x, 0, 1),
          controlled(root.adjoint(), 1, 2), controlled(x, 0, 1),
          controlled(root, 0, 2)};
}

std::vector<QuantumGate> mixed_control_chain(const Eigen::Matrix2cd& root) {
  const Eigen::Matrix2cd x = pauli_x();
  return {controlled(root, 1, 2), controlled(root.adjoint(), 0, 2),
          controlled(x, 0, 1), controlled(root.adjoint(), 1, 2),
          controlled(x, 0, 1)};
}

std::vector<ElementaryCheck> verify_elementary() {
  constexpr double kChainTolerance = 1e-10;
  std::vector<ElementaryCheck> out;
  const Eigen::Matrix2cd v = v_gate();
  out.push_back(check("V*V = X", v * v, pauli_x(), 1e-12));

  const auto unitary = [](const std::vector<QuantumGate>& gates) {
    return build_unitary(3, gates).matrix();
  };
  const Polarity pos = Polarity::Positive;
  const Polarity neg = Polarity::Negative;

  // U = X^t; the chain with root X^(t/2) squares to U, the mixed chain is
  // fed the adjoint root so that its R^-2 is U as well.
  for (const auto& [label, t] : {std::pair{"X", 1.0}, std::pair{"V", 0.5}}) {
    const Eigen::Matrix2cd u = x_power(t);
    const Eigen::Matrix2cd root = x_power(t / 2);
    out.push_back(check(std::string("two positive controls, U = ") + label,
                        unitary(two_control_chain(root)),
                        unitary(doubly_controlled(u, pos, pos)),
                        kChainTolerance));
    out.push_back(check(std::string("one negative control, U = ") + label,
                        unitary(mixed_control_chain(root.adjoint())),
                        unitary(doubly_controlled(u, pos, neg)),
                        kChainTolerance));
  }

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(8, 8);
  out.push_back(check("two positive controls, R = X gives identity",
                      unitary(two_control_chain(pauli_x())), id,
                      kChainTolerance));
  out.push_back(check("one negative control, R = X gives identity",
                      unitary(mixed_control_chain(pauli_x())), id,
                      kChainTolerance));
  return out;
}

}  // namespace revsynth
