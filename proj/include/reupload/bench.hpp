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
 * @file bench.hpp
 * Teacher-student benchmarking: random teacher circuits generate regression
 * targets, student circuits of varying depth and topology are trained on
 * them, and per-student losses are aggregated over teacher realizations.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reupload/circuit.hpp"
#include "reupload/trainer.hpp"

namespace reupload {

struct TeacherSpec {
    Architecture arch;
    ObservableSpec observable;
    int realizations{1};
    std::uint64_t seed{0};
    /// Divide targets by the teacher's qubit count so they lie in [0, 1].
    bool normalize{false};
    /// Replaces the random teacher parameters (inputs are still drawn).
    std::optional<ParameterSet> theta_override;

    /// Throws std::invalid_argument on M < 1 or an inconsistent observable.
    void validate() const;
};

struct StudentSpec {
    Architecture arch;
    ObservableSpec observable;

    /// Student with the sigma_z^tot readout.
    static StudentSpec local_z(const Architecture &arch) {
        return {arch, ObservableSpec::sigma_z_total(arch.qubits)};
    }
};

/// Teacher parameters of one realization, drawn from the stream
/// (seed, realization) before the inputs.
ParameterSet teacher_parameters(const TeacherSpec &ts, int realization);

/// K inputs uniform in [0,1]^n with targets F(x, theta_teacher).
Dataset generate_teacher_dataset(const TeacherSpec &ts, int realization, int K);

struct TrialRecord {
    int realization{0};
    int student{0};
    std::uint64_t seed{0};
    bool excluded{false};
    std::string reason;
    double best_cost{0.0};
    int best_restart{-1};
    /// Final cost of every restart; NaN for aborted restarts.
    std::vector<double> restart_costs;
};

struct StudentAggregate {
    int student{0};
    std::string label;
    Architecture arch;
    /// Mean and population std of the best-of-R cost per realization.
    double mean_cost{0.0};
    double std_cost{0.0};
    double min_cost{0.0};
    /// Same statistics over every non-aborted restart.
    double mean_all{0.0};
    double std_all{0.0};
    int realizations_used{0};
    int restarts_used{0};
    int excluded_trials{0};
    int aborted_restarts{0};
};

struct BenchmarkReport {
    std::string teacher;
    int samples{0};
    int realizations{0};
    int restarts{0};
    std::uint64_t master_seed{0};
    /// Sorted by (realization, student).
    std::vector<TrialRecord> trials;
    std::vector<StudentAggregate> aggregates;
};

/// Mean and population standard deviation.
struct MeanStd {
    double mean{0.0};
    double std{0.0};
};
MeanStd mean_std(std::span<const double> values);

/// Trains every student on every teacher realization. Trial seeds are
/// derived from (config.seed, realization, student); restarts then use
/// (trial seed, restart). Trials run on `threads` workers and are reduced in
/// sorted order.
BenchmarkReport run_benchmark(const TeacherSpec &ts,
                              const std::vector<StudentSpec> &students, int K,
                              const TrainConfig &config, unsigned threads = 1);

/// Recomputes the aggregates from the stored trials.
std::vector<StudentAggregate>
aggregate_trials(const std::vector<TrialRecord> &trials,
                 const std::vector<StudentSpec> &students);

struct PredictionMap {
    std::string label;
    int input_dim{0};
    int resolution{0};
    /// Row-major over the grid; the first coordinate varies slowest.
    std::vector<std::vector<double>> points;
    std::vector<double> values;
};

/// F(x, theta) on the uniform grid i / (G - 1) per dimension. Throws
/// std::invalid_argument for n > 2 or G < 2.
PredictionMap prediction_map(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec, int resolution);
/// reference - map, point by point. Throws when the grids differ.
PredictionMap residual_map(const PredictionMap &reference,
                           const PredictionMap &map);

struct GammaPoint {
    Architecture arch;
    std::size_t num_harmonics{0};
    std::size_t num_parameters{0};
    double gamma{0.0};
    std::string method;
};

/// Gamma for sigma_z^tot over the given depths and qubit counts. The
/// non-entangling family uses the factorized count; entangling points beyond
/// the symbolic memory guard are skipped.
std::vector<GammaPoint> gamma_sweep(std::span<const int> layers,
                                    std::span<const int> qubits, int input_dim,
                                    std::span<const Entanglement> entanglements,
                                    std::uint64_t seed, unsigned threads = 1);

} // namespace reupload
