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
#include "reupload/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "reupload/parallel.hpp"
#include "reupload/simulator.hpp"
#include "reupload/spectrum.hpp"

namespace reupload {

void TeacherSpec::validate() const {
    arch.validate();
    observable.validate(arch.qubits);
    if (realizations < 1) {
        throw std::invalid_argument("teacher realizations must be at least 1");
    }
    if (theta_override) {
        theta_override->check_shape(arch);
    }
}

ParameterSet teacher_parameters(const TeacherSpec &ts, int realization) {
    RngStream rng{ts.seed, static_cast<std::uint64_t>(realization)};
    const double half_pi = std::numbers::pi / 2.0;
    ParameterSet theta = ParameterSet::random(ts.arch, rng, -half_pi, half_pi);
    return ts.theta_override ? *ts.theta_override : theta;
}

Dataset generate_teacher_dataset(const TeacherSpec &ts, int realization, int K) {
    ts.validate();
    if (K < 1) {
        throw std::invalid_argument("teacher dataset needs K >= 1");
    }
    RngStream rng{ts.seed, static_cast<std::uint64_t>(realization)};
    const double half_pi = std::numbers::pi / 2.0;
    ParameterSet theta = ParameterSet::random(ts.arch, rng, -half_pi, half_pi);
    if (ts.theta_override) {
        theta = *ts.theta_override;
    }
    const Simulator sim(ts.arch, theta, ts.observable);
    const double scale = ts.normalize ? 1.0 / ts.arch.qubits : 1.0;
    Dataset data;
    data.inputs.reserve(static_cast<std::size_t>(K));
    data.targets.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        std::vector<double> x(static_cast<std::size_t>(ts.arch.input_dim));
        for (double &v : x) {
            v = rng.uniform();
        }
        data.targets.push_back(scale * std::abs(sim.signed_output(x)));
        data.inputs.push_back(std::move(x));
    }
    return data;
}

MeanStd mean_std(std::span<const double> values) {
    MeanStd out;
    if (values.empty()) {
        return out;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    out.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
        sq += (v - out.mean) * (v - out.mean);
    }
    out.std = std::sqrt(sq / static_cast<double>(values.size()));
    return out;
}

std::vector<StudentAggregate>
aggregate_trials(const std::vector<TrialRecord> &trials,
                 const std::vector<StudentSpec> &students) {
    std::vector<StudentAggregate> out;
    for (std::size_t s = 0; s < students.size(); ++s) {
        StudentAggregate agg;
        agg.student = static_cast<int>(s);
        agg.arch = students[s].arch;
        agg.label = students[s].arch.label();
        std::vector<double> best;
        std::vector<double> all;
        for (const auto &t : trials) {
            if (t.student != agg.student) {
                continue;
            }
            if (t.excluded) {
                ++agg.excluded_trials;
            } else {
                best.push_back(t.best_cost);
            }
            for (double c : t.restart_costs) {
                if (std::isnan(c)) {
                    ++agg.aborted_restarts;
                } else {
                    all.push_back(c);
                }
            }
        }
        const MeanStd b = mean_std(best);
        const MeanStd a = mean_std(all);
        agg.mean_cost = b.mean;
        agg.std_cost = b.std;
        agg.min_cost = best.empty() ? std::numeric_limits<double>::quiet_NaN()
                                    : *std::min_element(best.begin(), best.end());
        agg.mean_all = a.mean;
        agg.std_all = a.std;
        agg.realizations_used = static_cast<int>(best.size());
        agg.restarts_used = static_cast<int>(all.size());
        out.push_back(agg);
    }
    return out;
}

BenchmarkReport run_benchmark(const TeacherSpec &ts,
                              const std::vector<StudentSpec> &students, int K,
                              const TrainConfig &config, unsigned threads) {
    ts.validate();
    config.validate();
    for (const auto &s : students) {
        s.arch.validate();
        s.observable.validate(s.arch.qubits);
        if (s.arch.input_dim != ts.arch.input_dim) {
            throw std::invalid_argument("student " + s.arch.label() +
                                        " has a different input dimension "
                                        "than the teacher");
        }
    }
    std::vector<Dataset> datasets;
    for (int m = 0; m < ts.realizations; ++m) {
        datasets.push_back(generate_teacher_dataset(ts, m, K));
    }

    BenchmarkReport report;
    report.teacher = ts.arch.label();
    report.samples = K;
    report.realizations = ts.realizations;
    report.restarts = config.restarts;
    report.master_seed = config.seed;
    const std::size_t count =
        static_cast<std::size_t>(ts.realizations) * students.size();
    report.trials.resize(count);
    parallel_for(count, threads, [&](std::size_t job) {
        const auto m = static_cast<int>(job / students.size());
        const auto s = static_cast<int>(job % students.size());
        TrialRecord t;
        t.realization = m;
        t.student = s;
        t.seed = derive_seed({config.seed, static_cast<std::uint64_t>(m),
                              static_cast<std::uint64_t>(s)});
        TrainConfig tc = config;
        tc.seed = t.seed;
        tc.threads = 1;
        try {
            const TrainResult r =
                train(students[static_cast<std::size_t>(s)].arch,
                      datasets[static_cast<std::size_t>(m)],
                      students[static_cast<std::size_t>(s)].observable, tc);
            t.best_cost = r.best_cost;
            t.best_restart = r.best_restart;
            for (const auto &rec : r.restarts) {
                t.restart_costs.push_back(
                    rec.aborted ? std::numeric_limits<double>::quiet_NaN()
                                : rec.final_cost);
            }
        } catch (const std::runtime_error &e) {
            t.excluded = true;
            t.reason = e.what();
            t.best_cost = std::numeric_limits<double>::quiet_NaN();
            t.restart_costs.assign(static_cast<std::size_t>(config.restarts),
                                   std::numeric_limits<double>::quiet_NaN());
        }
        report.trials[job] = std::move(t);
    });
    report.aggregates = aggregate_trials(report.trials, students);
    return report;
}

PredictionMap prediction_map(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec, int resolution) {
    arch.validate();
    if (arch.input_dim > 2) {
        throw std::invalid_argument(
            "prediction maps are emitted for n <= 2 only; got n = " +
            std::to_string(arch.input_dim));
    }
    if (resolution < 2) {
        throw std::invalid_argument("prediction map resolution must be >= 2");
    }
    const Simulator sim(arch, theta, spec);
    PredictionMap map;
    map.label = arch.label();
    map.input_dim = arch.input_dim;
    map.resolution = resolution;
    const double h = 1.0 / (resolution - 1);
    if (arch.input_dim == 1) {
        for (int i = 0; i < resolution; ++i) {
            map.points.push_back({i * h});
        }
    } else {
        for (int i = 0; i < resolution; ++i) {
            for (int j = 0; j < resolution; ++j) {
                map.points.push_back({i * h, j * h});
            }
        }
    }
    map.values.reserve(map.points.size());
    for (const auto &x : map.points) {
        map.values.push_back(std::abs(sim.signed_output(x)));
    }
    return map;
}

PredictionMap residual_map(const PredictionMap &reference,
                           const PredictionMap &map) {
    if (reference.points != map.points) {
        throw std::invalid_argument("residual_map: grids differ");
    }
    PredictionMap out = map;
    out.label = reference.label + " - " + map.label;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = reference.values[i] - map.values[i];
    }
    return out;
}

std::vector<GammaPoint> gamma_sweep(std::span<const int> layers,
                                    std::span<const int> qubits, int input_dim,
                                    std::span<const Entanglement> entanglements,
                                    std::uint64_t seed, unsigned threads) {
    struct Job {
        Architecture arch;
    };
    std::vector<Job> jobs;
    for (Entanglement e : entanglements) {
        for (int q : qubits) {
            for (int l : layers) {
                Architecture a;
                a.layers = l;
                a.qubits = q;
                a.input_dim = input_dim;
                a.entanglement = e;
                a.validate();
                if (a.entangled() && (l * q > kMaxSlots || q > kMaxSymbolicQubits)) {
                    continue;
                }
                jobs.push_back({a});
            }
        }
    }
    std::vector<GammaPoint> out(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const Architecture &a = jobs[i].arch;
        const ParameterSet theta = generic_parameters(a, seed);
        const auto spec = ObservableSpec::sigma_z_total(a.qubits);
        GammaPoint p;
        p.arch = a;
        if (a.entangled()) {
            p.num_harmonics = symbolic_spectrum(a, theta, spec).report.num_harmonics;
            p.method = to_string(SpectrumMethod::Symbolic);
        } else {
            p.num_harmonics = factorized_count(a, theta, spec);
            p.method = to_string(SpectrumMethod::Factorized);
        }
        p.num_parameters = a.num_parameters();
        p.gamma = gamma_ratio(p.num_harmonics, a);
        out[i] = p;
    });
    return out;
}

} // namespace reupload
