// Copyright 2026 The Reupload Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file simulator.hpp
 * Statevector evaluation of a fixed (architecture, parameters, observable)
 * triple. Gates are applied locally instead of assembling 2^Q x 2^Q
 * matrices, which makes this the hot path for training and DFT sampling.
 */
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "reupload/circuit.hpp"

namespace reupload {

/// Which rotation of layer (l, q) a derivative refers to.
enum class GateRole {
    Data,      ///< angle w.x + beta
    Trainable, ///< angle alpha
};

/// Holds scratch buffers, so a single instance must not be shared between
/// threads; copies are independent.
class Simulator {
  public:
    Simulator(Architecture arch, const ParameterSet &theta,
              ComplexMatrix observable);
    Simulator(Architecture arch, const ParameterSet &theta,
              const ObservableSpec &spec);

    [[nodiscard]] const Architecture &architecture() const { return arch_; }
    [[nodiscard]] const ParameterSet &parameters() const { return theta_; }
    /// Replaces the parameters; throws std::invalid_argument on a shape
    /// mismatch.
    void set_parameters(const ParameterSet &theta);

    /// |phi(x)> = U(x, theta)|0...0>.
    [[nodiscard]] QuantumState state(std::span<const double> x) const;
    /// <phi(x)|M|phi(x)>.
    [[nodiscard]] double signed_output(std::span<const double> x) const;
    /// Signed output with the rotation angle of gate (l, q, role) offset by
    /// `shift`. Used by the parameter-shift rule.
    [[nodiscard]] double signed_output_shifted(std::span<const double> x,
                                               int l, int q, GateRole role,
                                               double shift) const;
    /// Signed output; writes d(signed output)/d(theta) in flat layout into
    /// `grad` using reverse-mode (adjoint) propagation.
    double signed_output_gradient(std::span<const double> x,
                                  std::span<double> grad) const;

  private:
    struct Gate {
        int layer{0};
        int qubit{-1}; ///< -1 for a two-qubit entangler factor
        GateRole role{GateRole::Data};
        Axis axis{Axis::X};
        std::size_t hi{0};
        std::size_t lo{0};
    };

    double angle(const Gate &g, std::span<const double> x) const;
    void run(std::span<const double> x, std::span<Complex> psi,
             const Gate *shifted, double shift) const;
    double measure(std::span<const Complex> psi) const;
    void apply_observable(std::span<const Complex> psi,
                          std::span<Complex> out) const;

    Architecture arch_;
    ParameterSet theta_;
    ComplexMatrix observable_;
    bool diagonal_{false};
    std::vector<double> diag_;
    std::vector<Gate> gates_;
    Mat4 e2_{};
    mutable std::vector<Complex> psi_;
    mutable std::vector<Complex> aux_;
};

} // namespace reupload
