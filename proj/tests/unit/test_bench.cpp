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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "reupload/bench.hpp"

using namespace reupload;

namespace {

Architecture make_arch(int L, int Q, int n, Entanglement e = Entanglement::None) {
    Architecture a;
    a.layers = L;
    a.qubits = Q;
    a.input_dim = n;
    a.entanglement = e;
    return a;
}

TeacherSpec make_teacher(int L, int Q, int n, Entanglement e, int M, std::uint64_t seed) {
    TeacherSpec ts;
    ts.arch = make_arch(L, Q, n, e);
    ts.observable = ObservableSpec::sigma_z_total(Q);
    ts.realizations = M;
    ts.seed = seed;
    return ts;
}

TrainConfig quick_config(int R, int iterations, std::uint64_t seed) {
    TrainConfig c;
    c.restarts = R;
    c.max_iterations = iterations;
    c.seed = seed;
    return c;
}

} // namespace

TEST_CASE("teacher datasets are reproducible per realization") {
    const auto ts = make_teacher(2, 2, 2, Entanglement::AllLayers, 3, 17);
    const Dataset a = generate_teacher_dataset(ts, 1, 50);
    const Dataset b = generate_teacher_dataset(ts, 1, 50);
    CHECK(a.inputs == b.inputs);
    CHECK(a.targets == b.targets);
    const Dataset c = generate_teacher_dataset(ts, 2, 50);
    CHECK(a.inputs != c.inputs);
}

TEST_CASE("teacher inputs fill the unit square") {
    const auto ts = make_teacher(2, 2, 2, Entanglement::None, 1, 3);
    const Dataset d = generate_teacher_dataset(ts, 0, 400);
    REQUIRE(d.size() == 400);
    for (std::size_t k = 0; k < d.size(); ++k) {
        REQUIRE(d.inputs[k].size() == 2);
        for (double v : d.inputs[k]) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(d.targets[k] >= 0.0);
        CHECK(d.targets[k] <= 2.0 + 1e-12);
    }
    const auto theta = teacher_parameters(ts, 0);
    for (std::size_t k = 0; k < d.size(); k += 37) {
        CHECK(std::abs(d.targets[k] -
                       evaluate_output(ts.arch, theta, d.inputs[k], ts.observable)) < 1e-12);
    }
}

TEST_CASE("zero teacher gives constant targets and normalization divides by Q") {
    auto ts = make_teacher(3, 2, 1, Entanglement::None, 1, 5);
    ts.theta_override = ParameterSet::zeros(ts.arch);
    for (double f : generate_teacher_dataset(ts, 0, 30).targets) {
        CHECK(f == 2.0);
    }
    ts.normalize = true;
    for (double f : generate_teacher_dataset(ts, 0, 30).targets) {
        CHECK(f == 1.0);
    }
}

TEST_CASE("teacher validation") {
    auto ts = make_teacher(2, 2, 1, Entanglement::None, 0, 1);
    CHECK_THROWS_AS(ts.validate(), std::invalid_argument);
    ts.realizations = 1;
    CHECK_THROWS_AS(generate_teacher_dataset(ts, 0, 0), std::invalid_argument);
    ts.observable = ObservableSpec::sigma_z_total(3);
    CHECK_THROWS_AS(ts.validate(), std::invalid_argument);
}

TEST_CASE("population mean and std") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const MeanStd m = mean_std(v);
    CHECK(m.mean == 2.5);
    CHECK(m.std == Catch::Approx(std::sqrt(1.25)).epsilon(1e-15));
    const std::vector<double> one{0.7};
    CHECK(mean_std(one).std == 0.0);
}

TEST_CASE("single trial benchmark reduces to one train call") {
    const auto ts = make_teacher(2, 1, 1, Entanglement::None, 1, 8);
    const std::vector<StudentSpec> students{StudentSpec::local_z(make_arch(2, 1, 1))};
    const auto cfg = quick_config(1, 100, 42);
    const auto report = run_benchmark(ts, students, 30, cfg);
    REQUIRE(report.trials.size() == 1);
    REQUIRE(report.aggregates.size() == 1);
    const auto &agg = report.aggregates[0];
    CHECK(agg.std_cost == 0.0);
    CHECK(agg.mean_cost == report.trials[0].best_cost);

    TrainConfig direct = cfg;
    direct.seed = report.trials[0].seed;
    CHECK(report.trials[0].seed == derive_seed({42, 0, 0}));
    const auto r = train(students[0].arch, generate_teacher_dataset(ts, 0, 30),
                         students[0].observable, direct);
    CHECK(r.best_cost == agg.mean_cost);
}

TEST_CASE("aggregates match an independent pass over the trials") {
    const auto ts = make_teacher(2, 2, 2, Entanglement::AllLayers, 3, 21);
    std::vector<StudentSpec> students;
    for (int L = 1; L <= 2; ++L) {
        students.push_back(StudentSpec::local_z(make_arch(L, 2, 2)));
        students.push_back(StudentSpec::local_z(make_arch(L, 2, 2, Entanglement::AllLayers)));
    }
    const auto report = run_benchmark(ts, students, 25, quick_config(3, 40, 7));
    REQUIRE(report.trials.size() == 12);
    for (std::size_t s = 0; s < students.size(); ++s) {
        double sum = 0.0;
        double minimum = std::numeric_limits<double>::infinity();
        int count = 0;
        for (const auto &t : report.trials) {
            if (t.student == static_cast<int>(s)) {
                double best = std::numeric_limits<double>::infinity();
                for (double c : t.restart_costs) {
                    best = std::min(best, c);
                }
                CHECK(best == t.best_cost);
                sum += t.best_cost;
                minimum = std::min(minimum, t.best_cost);
                ++count;
            }
        }
        const double mean = sum / count;
        double sq = 0.0;
        for (const auto &t : report.trials) {
            if (t.student == static_cast<int>(s)) {
                sq += (t.best_cost - mean) * (t.best_cost - mean);
            }
        }
        const auto &agg = report.aggregates[s];
        CHECK(std::abs(agg.mean_cost - mean) <= 1e-14);
        CHECK(std::abs(agg.std_cost - std::sqrt(sq / count)) <= 1e-14);
        CHECK(agg.std_cost >= 0.0);
        CHECK(agg.mean_cost >= agg.min_cost);
        CHECK(agg.min_cost == minimum);
        CHECK(agg.realizations_used == 3);
        CHECK(agg.restarts_used == 9);
        CHECK(agg.label == students[s].arch.label());
    }
}

TEST_CASE("benchmark is deterministic across worker counts") {
    const auto ts = make_teacher(2, 2, 1, Entanglement::AllLayers, 2, 4);
    const std::vector<StudentSpec> students{StudentSpec::local_z(make_arch(1, 2, 1)),
                                            StudentSpec::local_z(make_arch(2, 2, 1))};
    const auto a = run_benchmark(ts, students, 20, quick_config(2, 30, 1), 1);
    const auto b = run_benchmark(ts, students, 20, quick_config(2, 30, 1), 3);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].realization == b.trials[i].realization);
        CHECK(a.trials[i].student == b.trials[i].student);
        CHECK(a.trials[i].restart_costs == b.trials[i].restart_costs);
    }
}

TEST_CASE("student equal to the teacher sits at zero cost") {
    const auto ts = make_teacher(3, 2, 2, Entanglement::AllLayers, 1, 12);
    const Dataset d = generate_teacher_dataset(ts, 0, 60);
    Objective obj(ts.arch, ts.observable, d);
    const auto rec = descend(obj, teacher_parameters(ts, 0), quick_config(1, 50, 0));
    CHECK(rec.history.front() < 1e-28);
    CHECK(rec.final_cost < 1e-28);
}

TEST_CASE("failed trials are excluded and counted") {
    const auto ts = make_teacher(1, 1, 1, Entanglement::None, 2, 3);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<StudentSpec> students{
        StudentSpec::local_z(make_arch(1, 1, 1)),
        {make_arch(1, 1, 1), ObservableSpec::general({SingleQubitOperator{0, 0, 0, inf}})}};
    const auto report = run_benchmark(ts, students, 10, quick_config(2, 20, 0));
    CHECK(report.aggregates[0].excluded_trials == 0);
    CHECK(report.aggregates[1].excluded_trials == 2);
    CHECK(report.aggregates[1].realizations_used == 0);
    CHECK(std::isnan(report.aggregates[1].min_cost));
    for (const auto &t : report.trials) {
        if (t.student == 1) {
            CHECK(t.excluded);
            CHECK_FALSE(t.reason.empty());
        }
    }
}

TEST_CASE("students must share the teacher input dimension") {
    const auto ts = make_teacher(1, 1, 2, Entanglement::None, 1, 3);
    const std::vector<StudentSpec> students{StudentSpec::local_z(make_arch(1, 1, 1))};
    CHECK_THROWS_AS(run_benchmark(ts, students, 10, quick_config(1, 5, 0)),
                    std::invalid_argument);
}

TEST_CASE("prediction maps") {
    const auto a = make_arch(2, 2, 2);
    const auto spec = ObservableSpec::sigma_z_total(2);
    const auto flat = prediction_map(a, ParameterSet::zeros(a), spec, 7);
    CHECK(flat.points.size() == 49);
    for (double v : flat.values) {
        CHECK(v == flat.values.front());
    }
    CHECK(flat.points.front() == std::vector<double>{0.0, 0.0});
    CHECK(flat.points.back() == std::vector<double>{1.0, 1.0});

    const auto big = make_arch(4, 4, 2, Entanglement::AllLayers);
    RngStream rng{9};
    const auto theta = ParameterSet::random(big, rng, -1.5, 1.5);
    const auto map = prediction_map(big, theta, ObservableSpec::sigma_z_total(4), 50);
    REQUIRE(map.values.size() == 2500);
    for (double v : map.values) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
        CHECK(v <= 4.0 + 1e-12);
    }
    const auto residual = residual_map(map, map);
    for (double v : residual.values) {
        CHECK(v == 0.0);
    }
    CHECK_THROWS_AS(residual_map(map, flat), std::invalid_argument);
    CHECK_THROWS_AS(prediction_map(make_arch(1, 1, 3), ParameterSet::zeros(make_arch(1, 1, 3)),
                                   ObservableSpec::sigma_z_total(1), 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(prediction_map(a, ParameterSet::zeros(a), spec, 1), std::invalid_argument);

    const auto line = prediction_map(make_arch(1, 1, 1), ParameterSet::zeros(make_arch(1, 1, 1)),
                                     ObservableSpec::sigma_z_total(1), 11);
    CHECK(line.points.size() == 11);
}

TEST_CASE("gamma sweep reproduces the product-architecture law") {
    const std::vector<int> layers{1, 2, 3, 4, 5};
    const std::vector<int> qubits{2, 3, 4};
    const std::vector<Entanglement> ents{Entanglement::None};
    for (int n = 1; n <= 2; ++n) {
        const auto points = gamma_sweep(layers, qubits, n, ents, 3);
        REQUIRE(points.size() == 15);
        for (const auto &p : points) {
            const int L = p.arch.layers;
            const double expect = 2.0 * std::pow(3.0, L - 1) / ((2.0 + n) * L);
            CHECK(p.gamma == Catch::Approx(expect).epsilon(1e-15));
            CHECK(p.method == "factorized");
        }
    }
    const std::vector<Entanglement> ent{Entanglement::AllLayers};
    const std::vector<int> deep{2, 5};
    const auto guarded = gamma_sweep(deep, std::vector<int>{3}, 1, ent, 3);
    REQUIRE(guarded.size() == 1); // L * Q = 15 exceeds the symbolic guard
    CHECK(guarded[0].arch.layers == 2);
    CHECK(guarded[0].method == "symbolic");
}
