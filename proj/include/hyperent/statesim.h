// Copyright 2026 The hyperent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERENT_STATESIM_H
#define HYPERENT_STATESIM_H

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "hyperent/hypergraph.h"

namespace hyperent {

using Matrix4 = Eigen::Matrix4d;

/// Real pure state on n qubits. Basis index x = x_1 x_2 ... x_n with x_1 the
/// most significant bit.
///
/// The state is sqrt(weight) * components. Keeping the common factor apart
/// lets states like (+-1 ... +-1) / sqrt(2^n) stay exact for odd n.
class StateVector {
   public:
    /// Throws InvalidArgument unless components has 2^n entries and
    /// weight * |components|^2 = 1 within 1e-12.
    StateVector(int num_qubits, Eigen::VectorXd components, double weight = 1.0);

    int num_qubits() const noexcept {
        return n_;
    }
    const Eigen::VectorXd &components() const noexcept {
        return components_;
    }
    double weight() const noexcept {
        return weight_;
    }
    double amplitude(std::uint64_t x) const {
        return std::sqrt(weight_) * components_[static_cast<Eigen::Index>(x)];
    }

   private:
    int n_;
    Eigen::VectorXd components_;
    double weight_;
};

/// Two-qubit reduced density matrix of a real state. Rows and columns are
/// indexed by z = 2 x_i + x_j.
struct PairDensity {
    Matrix4 matrix = Matrix4::Zero();
};

/// Checks symmetry, unit trace (1e-12) and positive semidefiniteness
/// (smallest eigenvalue >= -1e-10). Throws InvalidArgument naming the
/// violated property.
void check_pair_density(const PairDensity &rho);

/// |g> = prod_e Z_e |+>^n, computed from the truth table of u(g) without
/// forming any gate.
StateVector hypergraph_state(const Hypergraph &g);

/// Partial trace onto qubits (i, j) of an arbitrary real pure state.
PairDensity reduce_pair(const StateVector &psi, Vertex i, Vertex j);

/// (1/sqrt(n)) sum of the n one-hot basis states.
StateVector w_state(int n);

}  // namespace hyperent

#endif
