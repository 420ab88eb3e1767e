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
#include "reupload/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reupload/parallel.hpp"

namespace reupload {

namespace {

constexpr double kShift = std::numbers::pi / 4.0;
constexpr double kFiniteStep = 1e-6;

double sign_of(double v) {
    if (v > 0.0) {
        return 1.0;
    }
    return v < 0.0 ? -1.0 : 0.0;
}

} // namespace

void Dataset::validate(int n) const {
    if (targets.empty()) {
        throw std::invalid_argument("dataset is empty");
    }
    if (inputs.size() != targets.size()) {
        throw std::invalid_argument("dataset has " + std::to_string(inputs.size()) +
                                    " inputs but " +
                                    std::to_string(targets.size()) + " targets");
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (inputs[k].size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument(
                "dataset row " + std::to_string(k + 1) + " has " +
                std::to_string(inputs[k].size()) + " inputs, expected " +
                std::to_string(n));
        }
        for (double v : inputs[k]) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw std::invalid_argument("dataset row " +
                                            std::to_string(k + 1) +
                                            " has an input outside [0, 1]");
            }
        }
        if (!std::isfinite(targets[k])) {
            throw std::invalid_argument("dataset row " + std::to_string(k + 1) +
                                        " has a non-finite target");
        }
    }
}

std::string to_string(GradientMethod m) {
    switch (m) {
    case GradientMethod::ParameterShift:
        return "parameter_shift";
    case GradientMethod::FiniteDifference:
        return "finite_difference";
    case GradientMethod::Adjoint:
        return "adjoint";
    }
    return "unknown";
}

GradientMethod parse_gradient_method(const std::string &s) {
    if (s == "parameter_shift") {
        return GradientMethod::ParameterShift;
    }
    if (s == "finite_difference") {
        return GradientMethod::FiniteDifference;
    }
    if (s == "adjoint") {
        return GradientMethod::Adjoint;
    }
    throw std::invalid_argument("unknown gradient method '" + s +
                                "' (expected parameter_shift, "
                                "finite_difference or adjoint)");
}

void TrainConfig::validate() const {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    if (!(learning_rate > 0.0)) {
        throw std::invalid_argument("learning_rate must be positive");
    }
    if (max_iterations < 0) {
        throw std::invalid_argument("max_iterations must be non-negative");
    }
}

Objective::Objective(const Architecture &arch, const ObservableSpec &spec,
                     const Dataset &data)
    : Objective(arch, build_observable(spec, arch.qubits), data) {}

Objective::Objective(const Architecture &arch, ComplexMatrix observable,
                     const Dataset &data)
    : arch_(arch), data_(&data),
      sim_(arch, ParameterSet::zeros(arch), std::move(observable)),
      scratch_(arch.num_parameters()) {
    data.validate(arch.input_dim);
}

double Objective::cost(const ParameterSet &theta) {
    sim_.set_parameters(theta);
    double acc = 0.0;
    for (std::size_t k = 0; k < data_->size(); ++k) {
        const double r = std::abs(sim_.signed_output(data_->inputs[k])) -
                         data_->targets[k];
        acc += r * r;
    }
    return acc / static_cast<double>(data_->size());
}

double Objective::gradient(const ParameterSet &theta, GradientMethod method,
                           std::span<double> grad) {
    if (grad.size() != arch_.num_parameters()) {
        throw std::invalid_argument("gradient buffer has wrong size");
    }
    switch (method) {
    case GradientMethod::FiniteDifference:
        return finite_difference_gradient(theta, grad);
    case GradientMethod::ParameterShift:
        sim_.set_parameters(theta);
        return shift_gradient(grad);
    case GradientMethod::Adjoint:
        sim_.set_parameters(theta);
        return adjoint_gradient(grad);
    }
    return 0.0;
}

double Objective::shift_gradient(std::span<double> grad) {
    std::fill(grad.begin(), grad.end(), 0.0);
    const auto n = static_cast<std::size_t>(arch_.input_dim);
    const double scale = 2.0 / static_cast<double>(data_->size());
    double acc = 0.0;
    for (std::size_t k = 0; k < data_->size(); ++k) {
        const auto &x = data_->inputs[k];
        const double e = sim_.signed_output(x);
        const double r = std::abs(e) - data_->targets[k];
        acc += r * r;
        const double w = scale * r * sign_of(e);
        if (w == 0.0) {
            continue;
        }
        for (int l = 0; l < arch_.layers; ++l) {
            for (int q = 0; q < arch_.qubits; ++q) {
                const std::size_t base =
                    (static_cast<std::size_t>(l) * arch_.qubits + q) * (n + 2);
                const double d_data =
                    sim_.signed_output_shifted(x, l, q, GateRole::Data, kShift) -
                    sim_.signed_output_shifted(x, l, q, GateRole::Data, -kShift);
                const double d_alpha =
                    sim_.signed_output_shifted(x, l, q, GateRole::Trainable,
                                               kShift) -
                    sim_.signed_output_shifted(x, l, q, GateRole::Trainable,
                                               -kShift);
                for (std::size_t i = 0; i < n; ++i) {
                    grad[base + i] += w * d_data * x[i];
                }
                grad[base + n] += w * d_data;
                grad[base + n + 1] += w * d_alpha;
            }
        }
    }
    return acc / static_cast<double>(data_->size());
}

double Objective::adjoint_gradient(std::span<double> grad) {
    std::fill(grad.begin(), grad.end(), 0.0);
    const double scale = 2.0 / static_cast<double>(data_->size());
    double acc = 0.0;
    for (std::size_t k = 0; k < data_->size(); ++k) {
        const double e = sim_.signed_output_gradient(data_->inputs[k], scratch_);
        const double r = std::abs(e) - data_->targets[k];
        acc += r * r;
        const double w = scale * r * sign_of(e);
        if (w == 0.0) {
            continue;
        }
        for (std::size_t j = 0; j < grad.size(); ++j) {
            grad[j] += w * scratch_[j];
        }
    }
    return acc / static_cast<double>(data_->size());
}

double Objective::finite_difference_gradient(const ParameterSet &theta,
                                             std::span<double> grad) {
    ParameterSet probe = theta;
    auto flat = probe.flat();
    for (std::size_t j = 0; j < flat.size(); ++j) {
        const double saved = flat[j];
        flat[j] = saved + kFiniteStep;
        const double up = cost(probe);
        flat[j] = saved - kFiniteStep;
        const double down = cost(probe);
        flat[j] = saved;
        grad[j] = (up - down) / (2.0 * kFiniteStep);
    }
    return cost(theta);
}

double cost(const Architecture &arch, const ParameterSet &theta,
            const Dataset &data, const ObservableSpec &spec) {
    Objective obj(arch, spec, data);
    return obj.cost(theta);
}

std::vector<double> gradient(const Architecture &arch, const ParameterSet &theta,
                             const Dataset &data, const ObservableSpec &spec,
                             GradientMethod method) {
    Objective obj(arch, spec, data);
    std::vector<double> grad(arch.num_parameters());
    obj.gradient(theta, method, grad);
    return grad;
}

RestartRecord descend(Objective &objective, ParameterSet theta,
                      const TrainConfig &config) {
    RestartRecord rec;
    const std::size_t np = theta.size();
    std::vector<double> grad(np);
    double current = objective.gradient(theta, config.gradient, grad);
    rec.history.push_back(current);
    double step = config.learning_rate;
    const double min_step = config.learning_rate * 1e-12;
    ParameterSet trial = theta;

    auto abort_with = [&](const std::string &why) {
        rec.aborted = true;
        rec.abort_reason = why;
        rec.final_cost = current;
        rec.theta = theta;
        return rec;
    };
    if (!std::isfinite(current)) {
        return abort_with("non-finite cost at initialization");
    }

    for (int it = 0; it < config.max_iterations; ++it) {
        rec.iterations = it + 1;
        bool accepted = false;
        double next = current;
        while (step >= min_step) {
            auto src = theta.flat();
            auto dst = trial.flat();
            for (std::size_t j = 0; j < np; ++j) {
                dst[j] = src[j] - step * grad[j];
            }
            next = objective.cost(trial);
            if (!std::isfinite(next)) {
                return abort_with("non-finite cost at iteration " +
                                  std::to_string(it + 1));
            }
            if (next <= current) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        const double change = current - next;
        std::swap(theta, trial);
        current = next;
        rec.history.push_back(current);
        step = std::min(step * 1.1, config.learning_rate);
        if (change < config.convergence_tol) {
            break;
        }
        current = objective.gradient(theta, config.gradient, grad);
        if (!std::isfinite(current)) {
            return abort_with("non-finite cost at iteration " +
                              std::to_string(it + 1));
        }
    }
    rec.final_cost = current;
    rec.theta = std::move(theta);
    return rec;
}

TrainResult train(const Architecture &arch, const Dataset &data,
                  const ObservableSpec &spec, const TrainConfig &config) {
    arch.validate();
    spec.validate(arch.qubits);
    config.validate();
    data.validate(arch.input_dim);
    const ComplexMatrix observable = build_observable(spec, arch.qubits);

    TrainResult result;
    result.seed = config.seed;
    result.restarts.resize(static_cast<std::size_t>(config.restarts));
    const double half_pi = std::numbers::pi / 2.0;
    parallel_for(result.restarts.size(), config.threads, [&](std::size_t r) {
        RngStream rng{config.seed, static_cast<std::uint64_t>(r)};
        ParameterSet init = ParameterSet::random(arch, rng, -half_pi, half_pi);
        Objective objective(arch, observable, data);
        RestartRecord rec = descend(objective, std::move(init), config);
        rec.index = static_cast<int>(r);
        result.restarts[r] = std::move(rec);
    });

    for (const auto &rec : result.restarts) {
        if (rec.aborted) {
            continue;
        }
        if (result.best_restart < 0 || rec.final_cost < result.best_cost) {
            result.best_cost = rec.final_cost;
            result.best_restart = rec.index;
            result.best_theta = rec.theta;
        }
    }
    if (result.best_restart < 0) {
        throw std::runtime_error("every restart aborted: " +
                                 result.restarts.front().abort_reason);
    }
    return result;
}

} // namespace reupload
