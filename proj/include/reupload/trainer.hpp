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
 * @file trainer.hpp
 * Squared-error regression with gradient descent and random restarts.
 *
 * The fitted output is the rectified expectation |<M>|. At points where the
 * expectation is exactly zero the kink contributes a zero subgradient.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reupload/circuit.hpp"
#include "reupload/simulator.hpp"

namespace reupload {

struct Dataset {
    std::vector<std::vector<double>> inputs;
    std::vector<double> targets;

    [[nodiscard]] std::size_t size() const { return targets.size(); }
    [[nodiscard]] int input_dim() const {
        return inputs.empty() ? 0 : static_cast<int>(inputs.front().size());
    }
    /// Throws std::invalid_argument unless K >= 1, every input has `n`
    /// components in [0, 1] and every value is finite.
    void validate(int n) const;
};

enum class GradientMethod {
    ParameterShift,
    FiniteDifference,
    Adjoint, ///< reverse-mode pass through the statevector
};

std::string to_string(GradientMethod m);
GradientMethod parse_gradient_method(const std::string &s);

struct TrainConfig {
    int restarts{1};
    int max_iterations{2000};
    double learning_rate{0.1};
    std::uint64_t seed{0};
    GradientMethod gradient{GradientMethod::Adjoint};
    double convergence_tol{1e-10};
    /// Restarts run concurrently on this many workers (0 = all cores).
    unsigned threads{1};

    /// Throws std::invalid_argument on R < 1, a non-positive rate or a
    /// negative iteration budget.
    void validate() const;
};

struct RestartRecord {
    int index{0};
    /// Cost after initialization and after every accepted step.
    std::vector<double> history;
    double final_cost{0.0};
    int iterations{0};
    bool aborted{false};
    std::string abort_reason;
    ParameterSet theta;
};

struct TrainResult {
    ParameterSet best_theta;
    double best_cost{0.0};
    int best_restart{-1};
    std::uint64_t seed{0};
    std::vector<RestartRecord> restarts;
};

/// Cost and gradient of one (architecture, observable, dataset) triple.
class Objective {
  public:
    Objective(const Architecture &arch, const ObservableSpec &spec,
              const Dataset &data);
    Objective(const Architecture &arch, ComplexMatrix observable,
              const Dataset &data);

    [[nodiscard]] const Architecture &architecture() const { return arch_; }

    /// (1/K) sum_k (|E_k| - f_k)^2.
    double cost(const ParameterSet &theta);
    /// Writes dC/dtheta into `grad` (flat layout) and returns the cost.
    double gradient(const ParameterSet &theta, GradientMethod method,
                    std::span<double> grad);

  private:
    double shift_gradient(std::span<double> grad);
    double finite_difference_gradient(const ParameterSet &theta,
                                      std::span<double> grad);
    double adjoint_gradient(std::span<double> grad);

    Architecture arch_;
    const Dataset *data_;
    Simulator sim_;
    std::vector<double> scratch_;
};

double cost(const Architecture &arch, const ParameterSet &theta,
            const Dataset &data, const ObservableSpec &spec);
std::vector<double> gradient(const Architecture &arch, const ParameterSet &theta,
                             const Dataset &data, const ObservableSpec &spec,
                             GradientMethod method);

/// Runs R restarts, each initialized uniformly in [-pi/2, pi/2] from the
/// stream (seed, restart). Throws std::runtime_error when every restart
/// aborts.
TrainResult train(const Architecture &arch, const Dataset &data,
                  const ObservableSpec &spec, const TrainConfig &config);

/// Single restart from a given starting point.
RestartRecord descend(Objective &objective, ParameterSet theta,
                      const TrainConfig &config);

} // namespace reupload
