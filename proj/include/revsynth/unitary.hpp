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

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "revsynth/gate.hpp"

namespace revsynth {

/// Single-qubit operator X^t = |+><+| + e^{i pi t} |-><-|. X^1 is NOT and
/// X^(1/2) = 1/2 [[1+i, 1-i], [1-i, 1+i]] is the V gate.
Eigen::Matrix2cd x_power(double t);

inline Eigen::Matrix2cd v_gate() { return x_power(0.5); }

/// A 2x2 unitary on `target`, applied when all controls match.
struct QuantumGate {
  Eigen::Matrix2cd op;
  Line target;
  std::vector<Control> controls;
};

class UnitaryMatrix {
 public:
  static constexpr int kMaxLines = 4;

  explicit UnitaryMatrix(Eigen::MatrixXcd m);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::Index dimension() const { return m_.rows(); }

  /// max |(U U^dagger - I)_ij| <= tolerance.
  bool is_unitary(double tolerance = 1e-10) const;

 private:
  Eigen::MatrixXcd m_;
};

/// Dense product over `lines` qubits (basis index bit l = line l); the first
/// gate in the sequence acts first.
UnitaryMatrix build_unitary(int lines, std::span<const QuantumGate> gates);

/// Largest entry modulus of a - b.
double max_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Two-control gate on lines 0, 1 (polarities given) targeting line 2 with
/// `op`, as a one-gate sequence.
std::vector<QuantumGate> doubly_controlled(const Eigen::Matrix2cd& op,
                                           Polarity first, Polarity second);

/**
 * Five single-control gates equal to a doubly-controlled R^2 (both
 * controls positive): C-R(1->2), CNOT(0->1), C-R^dagger(1->2), CNOT(0->1),
 * C-R(0->2).
 */
std::vector<QuantumGate> two_control_chain(const Eigen::Matrix2cd& root);

/**
 * Five single-control gates for a control on line 0 (positive) and line 1
 * (negative): C-R(1->2), C-R^dagger(0->2), CNOT(0->1), C-R^dagger(1->2),
 * CNOT(0->1). Realizes the doubly-controlled R^-2.
 */
std::vector<QuantumGate> mixed_control_chain(const Eigen::Matrix2cd& root);

struct ElementaryCheck {
  std::string name;
  double residual;
  double tolerance;
  bool passed;
};

/// Numerically checks V^2 = X and both five-gate chains for U in {X, V},
/// plus the degenerate chain with R = X, which must give the identity.
std::vector<ElementaryCheck> verify_elementary();

}  // namespace revsynth
