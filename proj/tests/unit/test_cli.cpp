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

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "reupload/cli.hpp"
#include "reupload/io.hpp"

using namespace reupload;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string &name) {
    const char *env = std::getenv("REUPLOAD_TEST_TMP");
    const fs::path root = env != nullptr ? fs::path(env)
                                         : fs::temp_directory_path() / "reupload_cli_test";
    const fs::path dir = root / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "reupload");
    std::vector<char *> argv;
    for (auto &a : args) {
        argv.push_back(a.data());
    }
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

int run_with(const fs::path &dir, const std::string &sub, const json &config,
             std::vector<std::string> extra = {}) {
    const fs::path cfg = dir / (sub + "_config.json");
    write_text(cfg, config.dump());
    std::vector<std::string> args{sub, "--config", cfg.string(), "--out",
                                  (dir / "out").string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
}

json read_json(const fs::path &p) { return json::parse(read_text(p)); }

std::vector<std::vector<std::string>> read_rows(const fs::path &p) {
    std::istringstream in(read_text(p));
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("config normalization") {
    const json cfg = cli::normalize_config("spectrum", json{{"layers", 2}, {"qubits", 3}});
    CHECK(cfg.at("input_dim") == 1);
    CHECK(cfg.at("entanglement") == "none");
    CHECK(cfg.at("seed") == 0);

    auto message = [](const std::string &sub, const json &raw) {
        try {
            cli::normalize_config(sub, raw);
        } catch (const cli::ConfigError &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("spectrum", json{{"qubits", 1}}) == "missing required field 'layers'");
    CHECK(message("spectrum", json{{"layers", "two"}, {"qubits", 1}}).find("'layers'") !=
          std::string::npos);
    CHECK(message("spectrum", json{{"layers", 1}, {"qubits", 1}, {"lr", 1}}).find("'lr'") !=
          std::string::npos);
    CHECK(message("spectrum", json{{"layers", 1}, {"qubits", 1}, {"seed", -3}}).find("'seed'") !=
          std::string::npos);
    CHECK(message("benchmark", json{{"mode", "teacher_student"}, {"teacher_layers", 1}})
              .find("teacher_qubits") != std::string::npos);
}

TEST_CASE("help and version exit cleanly; bad invocations exit 2") {
    CHECK(invoke({"--version"}) == cli::kOk);
    CHECK(invoke({"--help"}) == cli::kOk);
    CHECK(invoke({}) == cli::kConfigError);
    CHECK(invoke({"spectrum"}) == cli::kConfigError);
    CHECK(invoke({"spectrum", "--config", "/nonexistent/config.json"}) == cli::kConfigError);
    const fs::path dir = scratch("badjson");
    write_text(dir / "c.json", "{not json");
    CHECK(invoke({"spectrum", "--config", (dir / "c.json").string(), "--out",
                  (dir / "out").string()}) == cli::kConfigError);
    CHECK(run_with(dir, "spectrum", json::array()) == cli::kConfigError);
}

TEST_CASE("spectrum subcommand counts harmonics") {
    const fs::path dir = scratch("spectrum");
    REQUIRE(run_with(dir, "spectrum", json{{"layers", 2}, {"qubits", 2}}) == cli::kOk);
    const json report = read_json(dir / "out" / "spectrum.json");
    CHECK(report.at("symbolic").at("num_harmonics") == 12);
    CHECK(report.at("numeric").at("num_harmonics") == 12);
    CHECK(report.at("methods_agree") == true);
    CHECK(fs::exists(dir / "out" / "coefficients.csv"));
    CHECK(fs::exists(dir / "out" / "dft.csv"));
    CHECK(read_json(dir / "out" / "run.json").at("subcommand") == "spectrum");

    REQUIRE(run_with(dir, "spectrum", json{{"layers", 2}, {"qubits", 1}}) == cli::kOk);
    CHECK(read_json(dir / "out" / "spectrum.json").at("symbolic").at("num_harmonics") == 6);

    CHECK(run_with(dir, "spectrum", json{{"layers", 13}, {"qubits", 1}}) == cli::kShapeError);
    CHECK(run_with(dir, "spectrum", json{{"layers", 2}, {"qubits", 2}, {"samples_per_dim", 33}}) ==
          cli::kConfigError);
    CHECK(run_with(dir, "spectrum", json{{"layers", 1}, {"qubits", 2}, {"observable_paulis", "zzz"}}) ==
          cli::kConfigError);
}

TEST_CASE("rerunning the echoed config reproduces every file") {
    const fs::path dir = scratch("echo");
    const json cfg{{"layers", 2}, {"qubits", 2}, {"entanglement", "all"}, {"seed", 11}};
    REQUIRE(run_with(dir, "spectrum", cfg, {"--seed", "5"}) == cli::kOk);
    const fs::path first = dir / "first";
    fs::rename(dir / "out", first);
    CHECK(read_json(first / "config.json").at("seed") == 5);
    REQUIRE(invoke({"spectrum", "--config", (first / "config.json").string(), "--out",
                    (dir / "out").string()}) == cli::kOk);
    for (const auto &entry : fs::directory_iterator(first)) {
        const fs::path again = dir / "out" / entry.path().filename();
        REQUIRE(fs::exists(again));
        CHECK(read_text(entry.path()) == read_text(again));
    }
}

TEST_CASE("simulate with zero parameters is constant") {
    const fs::path dir = scratch("simulate");
    REQUIRE(run_with(dir, "simulate",
                     json{{"layers", 2}, {"qubits", 2}, {"theta_init", "zeros"},
                          {"grid_points", 10}}) == cli::kOk);
    const auto rows = read_rows(dir / "out" / "outputs.csv");
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"x1", "signed", "output"});
    for (std::size_t r = 1; r < rows.size(); ++r) {
        CHECK(rows[r][2] == rows[1][2]);
        CHECK(std::stod(rows[r][2]) == 2.0);
    }

    REQUIRE(run_with(dir, "simulate",
                     json{{"layers", 1}, {"qubits", 1}, {"input_dim", 2},
                          {"inputs", json::array({json::array({0.1, 0.2}), json::array({0.3, 0.4})})}}) ==
            cli::kOk);
    CHECK(read_rows(dir / "out" / "outputs.csv").size() == 3);
    CHECK(run_with(dir, "simulate",
                   json{{"layers", 1}, {"qubits", 1}, {"theta_values", json::array({0.1, 0.2})}}) ==
          cli::kShapeError);
}

TEST_CASE("train fits a self-generated dataset") {
    const fs::path dir = scratch("train");
    // Targets from a one-layer circuit with known parameters; the expectation
    // keeps one sign over [0, 1].
    Architecture a;
    const auto theta = ParameterSet::from_flat(a, std::vector<double>{0.5, 0.1, 0.4});
    Dataset d;
    for (int k = 0; k <= 20; ++k) {
        const double x = k / 20.0;
        d.inputs.push_back({x});
        d.targets.push_back(evaluate_output(a, theta, d.inputs.back(),
                                            ObservableSpec::sigma_z_total(1)));
    }
    write_text(dir / "data.csv", dataset_to_csv(d));
    const json cfg{{"layers", 1}, {"qubits", 1}, {"restarts", 4}, {"seed", 3},
                   {"max_iterations", 10000}, {"learning_rate", 1.0}, {"convergence_tol", 0.0}};
    REQUIRE(run_with(dir, "train", cfg, {"--data", (dir / "data.csv").string()}) == cli::kOk);
    const json result = read_json(dir / "out" / "train_result.json");
    CHECK(result.at("best_cost").get<double>() <= 1e-8);
    const std::string history = read_text(dir / "out" / "loss_history.csv");
    CHECK(history.rfind("restart,iteration,cost\n", 0) == 0);

    const std::string first = read_text(dir / "out" / "train_result.json");
    REQUIRE(run_with(dir, "train", cfg, {"--data", (dir / "data.csv").string(), "--threads", "2"}) ==
            cli::kOk);
    CHECK(read_text(dir / "out" / "train_result.json") == first);
}

TEST_CASE("train reports data errors with the row") {
    const fs::path dir = scratch("train_bad");
    write_text(dir / "bad.csv", "x1,f\n0.1,1\n1.4,0\n");
    const json cfg{{"layers", 1}, {"qubits", 1}};
    CHECK(run_with(dir, "train", cfg, {"--data", (dir / "bad.csv").string()}) == cli::kDataError);
    write_text(dir / "wide.csv", "x1,x2,f\n0.1,0.2,1\n");
    CHECK(run_with(dir, "train", cfg, {"--data", (dir / "wide.csv").string()}) == cli::kDataError);
    CHECK(run_with(dir, "train", cfg, {"--data", (dir / "missing.csv").string()}) ==
          cli::kDataError);
    CHECK(run_with(dir, "train", json{{"layers", 1}, {"qubits", 1}, {"gradient", "magic"},
                                      {"data", (dir / "bad.csv").string()}}) != cli::kOk);
}

TEST_CASE("benchmark teacher-student outputs") {
    const fs::path dir = scratch("benchmark");
    const json cfg{{"mode", "teacher_student"}, {"teacher_layers", 2}, {"teacher_qubits", 2},
                   {"student_layers", json::array({1})}, {"student_entanglements", json::array({"none"})},
                   {"samples", 20}, {"max_iterations", 10}, {"input_dim", 2}, {"seed", 4},
                   {"prediction_grid", 5}};
    REQUIRE(run_with(dir, "benchmark", cfg) == cli::kOk);
    const auto trials = read_rows(dir / "out" / "trials.csv");
    CHECK(trials.size() == 2);
    const auto aggregates = read_rows(dir / "out" / "aggregates.csv");
    REQUIRE(aggregates.size() == 2);
    // The quoted label spans two cells, so std_cost sits one column later.
    CHECK(aggregates[1][7] == "0");
    CHECK(fs::exists(dir / "out" / "teacher_map.csv"));
    CHECK(read_rows(dir / "out" / "teacher_map.csv").size() == 26);

    const json sweep{{"mode", "teacher_student"}, {"teacher_layers", 2}, {"teacher_qubits", 2},
                     {"student_layers", json::array({1, 2})}, {"realizations", 2}, {"restarts", 2},
                     {"samples", 15}, {"max_iterations", 5}, {"input_dim", 2}};
    REQUIRE(run_with(dir, "benchmark", sweep, {"--threads", "2"}) == cli::kOk);
    const auto depth = read_rows(dir / "out" / "depth_table.csv");
    REQUIRE(depth.size() == 3);
    CHECK(depth[0] == std::vector<std::string>{"layers", "mean_cost_none", "std_cost_none",
                                               "mean_cost_all", "std_cost_all"});
    CHECK(read_rows(dir / "out" / "trials.csv").size() == 1 + 2 * 4 * 2);
}

TEST_CASE("benchmark gamma sweep outputs") {
    const fs::path dir = scratch("gamma");
    const json cfg{{"mode", "gamma_sweep"}, {"sweep_layers", json::array({1, 2, 3})},
                   {"sweep_qubits", json::array({2})}, {"input_dim", 1}};
    REQUIRE(run_with(dir, "benchmark", cfg) == cli::kOk);
    const auto rows = read_rows(dir / "out" / "gamma.csv");
    CHECK(rows.size() == 1 + 3 * 2);
    CHECK(run_with(dir, "benchmark", json{{"mode", "fancy"}}) == cli::kConfigError);
}
