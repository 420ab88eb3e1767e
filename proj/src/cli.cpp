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
#include "reupload/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "reupload/bench.hpp"
#include "reupload/io.hpp"
#include "reupload/spectrum.hpp"
#include "reupload/trainer.hpp"

namespace reupload::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class CrossCheckFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Type { Int, Number, String, Bool, IntList, StringList, Matrix, Any };

struct Field {
    const char *name;
    Type type;
    json fallback; ///< null = required (unless optional)
    bool optional{false};
};

bool matches(const json &v, Type t) {
    auto all = [&](auto pred) {
        return v.is_array() && std::all_of(v.begin(), v.end(), pred);
    };
    switch (t) {
    case Type::Int:
        return v.is_number_integer();
    case Type::Number:
        return v.is_number();
    case Type::String:
        return v.is_string();
    case Type::Bool:
        return v.is_boolean();
    case Type::IntList:
        return all([](const json &e) { return e.is_number_integer(); });
    case Type::StringList:
        return all([](const json &e) { return e.is_string(); });
    case Type::Matrix:
        return all([](const json &row) {
            return row.is_array() &&
                   std::all_of(row.begin(), row.end(),
                               [](const json &e) { return e.is_number(); });
        });
    case Type::Any:
        return true;
    }
    return false;
}

const char *type_name(Type t) {
    switch (t) {
    case Type::Int:
        return "an integer";
    case Type::Number:
        return "a number";
    case Type::String:
        return "a string";
    case Type::Bool:
        return "a boolean";
    case Type::IntList:
        return "a list of integers";
    case Type::StringList:
        return "a list of strings";
    case Type::Matrix:
        return "a list of number lists";
    case Type::Any:
        return "any value";
    }
    return "?";
}

std::vector<Field> circuit_fields() {
    return {
        {"layers", Type::Int, nullptr},
        {"qubits", Type::Int, nullptr},
        {"input_dim", Type::Int, 1},
        {"layer_kind", Type::String, "standard"},
        {"entanglement", Type::String, "none"},
        {"entangler_order", Type::String, "descending"},
        {"observable_kind", Type::String, "local_sum"},
        {"observable_paulis", Type::String, "z"},
        {"observable_u", Type::Matrix, json::array()},
        {"seed", Type::Int, 0},
    };
}

std::vector<Field> train_fields() {
    return {
        {"restarts", Type::Int, 1},
        {"max_iterations", Type::Int, 2000},
        {"learning_rate", Type::Number, 0.1},
        {"gradient", Type::String, "adjoint"},
        {"convergence_tol", Type::Number, 1e-10},
    };
}

std::vector<Field> schema(const std::string &sub, const json &raw) {
    std::vector<Field> f;
    auto add = [&](const std::vector<Field> &more) {
        f.insert(f.end(), more.begin(), more.end());
    };
    if (sub == "simulate") {
        add(circuit_fields());
        add({{"theta", Type::Matrix, nullptr, true},
             {"theta_values", Type::Any, nullptr, true},
             {"theta_init", Type::String, "random"},
             {"inputs", Type::Matrix, nullptr, true},
             {"grid_points", Type::Int, 11}});
    } else if (sub == "spectrum") {
        add(circuit_fields());
        add({{"theta_values", Type::Any, nullptr, true},
             {"theta_init", Type::String, "generic"},
             {"zero_tolerance", Type::Number, kDefaultZeroTolerance},
             {"peak_threshold", Type::Number, kDefaultPeakThreshold},
             {"samples_per_dim", Type::Int, 0}});
    } else if (sub == "train") {
        add(circuit_fields());
        add(train_fields());
        add({{"data", Type::String, nullptr, true},
             {"normalize_targets", Type::Bool, false}});
    } else if (sub == "benchmark") {
        const std::string mode =
            raw.contains("mode") && raw["mode"].is_string()
                ? raw["mode"].get<std::string>()
                : "teacher_student";
        f.push_back({"mode", Type::String, "teacher_student"});
        f.push_back({"seed", Type::Int, 0});
        f.push_back({"input_dim", Type::Int, 2});
        if (mode == "gamma_sweep") {
            add({{"sweep_layers", Type::IntList, nullptr},
                 {"sweep_qubits", Type::IntList, nullptr},
                 {"sweep_entanglements", Type::StringList,
                  json::array({"none", "all"})}});
        } else {
            add(train_fields());
            f.back() = {"convergence_tol", Type::Number, 1e-10};
            add({{"teacher_layers", Type::Int, nullptr},
                 {"teacher_qubits", Type::Int, nullptr},
                 {"teacher_entanglement", Type::String, "all"},
                 {"teacher_layer_kind", Type::String, "standard"},
                 {"teacher_seed", Type::Int, 0},
                 {"realizations", Type::Int, 1},
                 {"samples", Type::Int, 400},
                 {"normalize", Type::Bool, false},
                 {"student_layers", Type::IntList, nullptr},
                 {"student_qubits", Type::Int, nullptr, true},
                 {"student_entanglements", Type::StringList,
                  json::array({"none", "all"})},
                 {"student_layer_kind", Type::String, "standard"},
                 {"prediction_grid", Type::Int, 0}});
        }
    } else {
        throw ConfigError("unknown subcommand '" + sub + "'");
    }
    return f;
}

Architecture architecture_from(const json &c) {
    Architecture a;
    a.layers = c["layers"].get<int>();
    a.qubits = c["qubits"].get<int>();
    a.input_dim = c["input_dim"].get<int>();
    try {
        a.kind = parse_layer_kind(c["layer_kind"].get<std::string>());
        a.entanglement = parse_entanglement(c["entanglement"].get<std::string>());
        a.entangler_order =
            parse_entangler_order(c["entangler_order"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return a;
}

ObservableSpec observable_from(const json &c, int qubits) {
    ObservableKind kind{};
    try {
        kind = parse_observable_kind(c["observable_kind"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    ObservableSpec spec;
    spec.kind = kind;
    if (kind == ObservableKind::GeneralPerQubit) {
        const json &u = c["observable_u"];
        if (u.size() != static_cast<std::size_t>(qubits) && u.size() != 1) {
            throw ConfigError("field 'observable_u' needs one [u_o,u_x,u_y,u_z] "
                              "row per qubit (or a single shared row)");
        }
        for (int q = 0; q < qubits; ++q) {
            const json &row = u[u.size() == 1 ? 0 : static_cast<std::size_t>(q)];
            if (row.size() != 4) {
                throw ConfigError(
                    "field 'observable_u' rows must have 4 entries");
            }
            spec.per_qubit.push_back({row[0].get<double>(), row[1].get<double>(),
                                      row[2].get<double>(), row[3].get<double>()});
        }
        return spec;
    }
    const std::string p = c["observable_paulis"].get<std::string>();
    if (p.size() != 1 && p.size() != static_cast<std::size_t>(qubits)) {
        throw ConfigError("field 'observable_paulis' needs 1 or Q characters");
    }
    try {
        for (int q = 0; q < qubits; ++q) {
            spec.per_qubit.push_back(SingleQubitOperator::pauli(
                p[p.size() == 1 ? 0 : static_cast<std::size_t>(q)]));
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("field 'observable_paulis': ") + e.what());
    }
    return spec;
}

TrainConfig train_config_from(const json &c) {
    TrainConfig t;
    t.restarts = c["restarts"].get<int>();
    t.max_iterations = c["max_iterations"].get<int>();
    t.learning_rate = c["learning_rate"].get<double>();
    t.convergence_tol = c["convergence_tol"].get<double>();
    t.seed = c["seed"].get<std::uint64_t>();
    try {
        t.gradient = parse_gradient_method(c["gradient"].get<std::string>());
        t.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return t;
}

ParameterSet initial_parameters(const json &c, const Architecture &arch) {
    if (c.contains("theta_values")) {
        const json &v = c["theta_values"];
        if (!v.is_array() ||
            !std::all_of(v.begin(), v.end(),
                         [](const json &e) { return e.is_number(); })) {
            throw ConfigError("field 'theta_values' must be a list of numbers");
        }
        return ParameterSet::from_flat(arch, v.get<std::vector<double>>());
    }
    const std::string init = c["theta_init"].get<std::string>();
    const auto seed = c["seed"].get<std::uint64_t>();
    if (init == "zeros") {
        return ParameterSet::zeros(arch);
    }
    if (init == "random") {
        RngStream rng{seed};
        const double h = std::numbers::pi / 2.0;
        return ParameterSet::random(arch, rng, -h, h);
    }
    if (init == "generic") {
        return generic_parameters(arch, seed);
    }
    throw ConfigError("field 'theta_init' must be zeros, random or generic");
}

void write_common(const fs::path &out, const std::string &sub, const json &cfg) {
    write_text(out / "config.json", cfg.dump(2) + "\n");
    json run;
    run["subcommand"] = sub;
    run["seed"] = cfg["seed"];
    run["version"] = kVersion;
    write_text(out / "run.json", run.dump(2) + "\n");
}

int cmd_simulate(const json &cfg, const fs::path &out) {
    const Architecture arch = architecture_from(cfg);
    arch.validate();
    const ObservableSpec spec = observable_from(cfg, arch.qubits);
    spec.validate(arch.qubits);
    const ParameterSet theta = initial_parameters(cfg, arch);

    std::vector<std::vector<double>> points;
    if (cfg.contains("inputs")) {
        points = cfg["inputs"].get<std::vector<std::vector<double>>>();
    } else {
        const int g = cfg["grid_points"].get<int>();
        if (g < 1) {
            throw ConfigError("field 'grid_points' must be positive");
        }
        const std::size_t total = static_cast<std::size_t>(
            std::pow(static_cast<double>(g), arch.input_dim));
        if (total > (std::size_t{1} << 22)) {
            throw ConfigError("field 'grid_points' gives too many points");
        }
        for (std::size_t k = 0; k < total; ++k) {
            std::vector<double> x(static_cast<std::size_t>(arch.input_dim));
            std::size_t rest = k;
            for (int i = arch.input_dim - 1; i >= 0; --i) {
                const auto idx = static_cast<int>(rest % static_cast<std::size_t>(g));
                rest /= static_cast<std::size_t>(g);
                x[static_cast<std::size_t>(i)] = g == 1 ? 0.0 : idx / double(g - 1);
            }
            points.push_back(std::move(x));
        }
    }
    const Simulator sim(arch, theta, spec);
    std::string csv;
    for (int i = 0; i < arch.input_dim; ++i) {
        csv += "x" + std::to_string(i + 1) + ",";
    }
    csv += "signed,output\n";
    for (const auto &x : points) {
        if (x.size() != static_cast<std::size_t>(arch.input_dim)) {
            throw std::invalid_argument("input point has " +
                                        std::to_string(x.size()) +
                                        " components, expected " +
                                        std::to_string(arch.input_dim));
        }
        const double e = sim.signed_output(x);
        for (double v : x) {
            csv += format_double(v) + ",";
        }
        csv += format_double(e) + "," + format_double(std::abs(e)) + "\n";
    }
    write_text(out / "outputs.csv", csv);
    json meta;
    meta["architecture"] = to_json(arch);
    meta["observable"] = to_json(spec);
    meta["theta"] = to_json(theta);
    meta["points"] = points.size();
    write_text(out / "simulation.json", meta.dump(2) + "\n");
    std::cout << "simulate: " << points.size() << " points written to "
              << (out / "outputs.csv").string() << "\n";
    return kOk;
}

int cmd_spectrum(const json &cfg, const fs::path &out, unsigned threads) {
    const Architecture arch = architecture_from(cfg);
    arch.validate();
    const ObservableSpec spec = observable_from(cfg, arch.qubits);
    spec.validate(arch.qubits);
    const ParameterSet theta =
        with_canonical_frequencies(arch, initial_parameters(cfg, arch));
    const double tol = cfg["zero_tolerance"].get<double>();
    const double peak = cfg["peak_threshold"].get<double>();
    const int samples = cfg["samples_per_dim"].get<int>();
    if (samples < 0) {
        throw ConfigError("field 'samples_per_dim' must be non-negative");
    }

    const auto sym = symbolic_spectrum(arch, theta, spec, tol, threads);
    const auto num = numeric_spectrum(arch, theta, spec,
                                      static_cast<std::size_t>(samples), peak);
    const bool agree = sym.report.num_harmonics == num.report.num_harmonics;

    write_text(out / "coefficients.csv", coefficients_to_csv(sym));
    write_text(out / "dft.csv", dft_to_csv(num));
    json report;
    report["architecture"] = to_json(arch);
    report["observable"] = to_json(spec);
    report["frequency_assignment"] = "canonical: slot d drives input d mod n "
                                     "with weight 3^(d / n)";
    report["theta"] = to_json(theta);
    report["symbolic"] = to_json(sym.report);
    report["numeric"] = to_json(num.report);
    report["methods_agree"] = agree;
    if (!arch.entangled()) {
        report["scaling_check"] = scaling_check(arch, spec);
    }
    write_text(out / "spectrum.json", report.dump(2) + "\n");
    std::cout << "spectrum: " << arch.label() << " " << spec.label()
              << " N_h symbolic=" << sym.report.num_harmonics
              << " numeric=" << num.report.num_harmonics
              << " gamma=" << format_double(sym.report.gamma) << "\n";
    if (!agree) {
        throw CrossCheckFailure("symbolic and numeric N_h disagree (" +
                                std::to_string(sym.report.num_harmonics) +
                                " vs " + std::to_string(num.report.num_harmonics) +
                                ")");
    }
    return kOk;
}

int cmd_train(const json &cfg, const fs::path &out, unsigned threads) {
    const Architecture arch = architecture_from(cfg);
    arch.validate();
    const ObservableSpec spec = observable_from(cfg, arch.qubits);
    spec.validate(arch.qubits);
    TrainConfig tc = train_config_from(cfg);
    tc.threads = threads;
    if (!cfg.contains("data")) {
        throw ConfigError("missing required field 'data' (or pass --data)");
    }
    Dataset data = read_dataset_csv(cfg["data"].get<std::string>(), arch.input_dim);
    if (cfg["normalize_targets"].get<bool>()) {
        for (double &f : data.targets) {
            f /= arch.qubits;
        }
    }
    const TrainResult result = train(arch, data, spec, tc);
    json j = to_json(result);
    j["architecture"] = to_json(arch);
    j["observable"] = to_json(spec);
    j["gradient"] = to_string(tc.gradient);
    j["samples"] = data.size();
    write_text(out / "train_result.json", j.dump(2) + "\n");
    write_text(out / "loss_history.csv", loss_history_to_csv(result));
    std::cout << "train: " << arch.label()
              << " best_cost=" << format_double(result.best_cost)
              << " (restart " << result.best_restart << ")\n";
    return kOk;
}

Entanglement entanglement_of(const std::string &s) {
    try {
        return parse_entanglement(s);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

int cmd_gamma_sweep(const json &cfg, const fs::path &out, unsigned threads) {
    const auto layers = cfg["sweep_layers"].get<std::vector<int>>();
    const auto qubits = cfg["sweep_qubits"].get<std::vector<int>>();
    std::vector<Entanglement> ents;
    for (const auto &e : cfg["sweep_entanglements"]) {
        ents.push_back(entanglement_of(e.get<std::string>()));
    }
    const auto points =
        gamma_sweep(layers, qubits, cfg["input_dim"].get<int>(), ents,
                    cfg["seed"].get<std::uint64_t>(), threads);
    write_text(out / "gamma.csv", gamma_to_csv(points));
    std::cout << "benchmark gamma_sweep: " << points.size() << " points\n";
    return kOk;
}

int cmd_benchmark(const json &cfg, const fs::path &out, unsigned threads) {
    const std::string mode = cfg["mode"].get<std::string>();
    if (mode == "gamma_sweep") {
        return cmd_gamma_sweep(cfg, out, threads);
    }
    if (mode != "teacher_student") {
        throw ConfigError("field 'mode' must be teacher_student or gamma_sweep");
    }
    const int n = cfg["input_dim"].get<int>();
    TeacherSpec ts;
    ts.arch.layers = cfg["teacher_layers"].get<int>();
    ts.arch.qubits = cfg["teacher_qubits"].get<int>();
    ts.arch.input_dim = n;
    ts.arch.entanglement = entanglement_of(cfg["teacher_entanglement"].get<std::string>());
    try {
        ts.arch.kind = parse_layer_kind(cfg["teacher_layer_kind"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    ts.arch.validate();
    ts.observable = ObservableSpec::sigma_z_total(ts.arch.qubits);
    ts.realizations = cfg["realizations"].get<int>();
    ts.seed = cfg["teacher_seed"].get<std::uint64_t>();
    ts.normalize = cfg["normalize"].get<bool>();
    if (ts.realizations < 1) {
        throw ConfigError("field 'realizations' must be at least 1");
    }
    const int samples = cfg["samples"].get<int>();
    if (samples < 1) {
        throw ConfigError("field 'samples' must be at least 1");
    }
    const int sq = cfg.contains("student_qubits") ? cfg["student_qubits"].get<int>()
                                                  : ts.arch.qubits;
    LayerKind skind{};
    try {
        skind = parse_layer_kind(cfg["student_layer_kind"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    std::vector<StudentSpec> students;
    std::vector<Entanglement> ents;
    for (const auto &e : cfg["student_entanglements"]) {
        ents.push_back(entanglement_of(e.get<std::string>()));
    }
    const auto layers = cfg["student_layers"].get<std::vector<int>>();
    for (Entanglement e : ents) {
        for (int l : layers) {
            Architecture a;
            a.layers = l;
            a.qubits = sq;
            a.input_dim = n;
            a.kind = skind;
            a.entanglement = e;
            a.validate();
            students.push_back(StudentSpec::local_z(a));
        }
    }
    const TrainConfig tc = train_config_from(cfg);
    const BenchmarkReport report = run_benchmark(ts, students, samples, tc, threads);

    write_text(out / "trials.csv", trials_to_csv(report));
    write_text(out / "aggregates.csv", aggregates_to_csv(report));
    json j = to_json(report);
    j["teacher_architecture"] = to_json(ts.arch);
    j["teacher_seed"] = ts.seed;
    j["normalize"] = ts.normalize;
    write_text(out / "benchmark.json", j.dump(2) + "\n");

    // Depth table: one row per L, one (mean, std) column pair per topology.
    std::string table = "layers";
    for (Entanglement e : ents) {
        table += ",mean_cost_" + to_string(e) + ",std_cost_" + to_string(e);
    }
    table += "\n";
    for (std::size_t li = 0; li < layers.size(); ++li) {
        table += std::to_string(layers[li]);
        for (std::size_t ei = 0; ei < ents.size(); ++ei) {
            const auto &a = report.aggregates[ei * layers.size() + li];
            table += "," + format_double(a.mean_cost) + "," +
                     format_double(a.std_cost);
        }
        table += "\n";
    }
    write_text(out / "depth_table.csv", table);

    const int grid = cfg["prediction_grid"].get<int>();
    if (grid > 0) {
        const auto map = prediction_map(ts.arch, teacher_parameters(ts, 0),
                                        ts.observable, grid);
        write_text(out / "teacher_map.csv", prediction_map_to_csv(map));
    }
    std::cout << "benchmark: " << report.trials.size() << " trials, "
              << students.size() << " students\n";
    return kOk;
}

} // namespace

json normalize_config(const std::string &subcommand, const json &raw) {
    if (!raw.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    const auto fields = schema(subcommand, raw);
    json out = json::object();
    for (const auto &f : fields) {
        if (raw.contains(f.name) && !raw[f.name].is_null()) {
            const json &v = raw[f.name];
            if (!matches(v, f.type)) {
                throw ConfigError(std::string("field '") + f.name + "' must be " +
                                  type_name(f.type));
            }
            out[f.name] = v;
        } else if (!f.fallback.is_null()) {
            out[f.name] = f.fallback;
        } else if (!f.optional) {
            throw ConfigError(std::string("missing required field '") + f.name +
                              "'");
        }
    }
    for (const auto &[key, value] : raw.items()) {
        const bool known = std::any_of(fields.begin(), fields.end(),
                                       [&](const Field &f) { return key == f.name; });
        if (!known) {
            throw ConfigError("unknown field '" + key + "' for " + subcommand);
        }
    }
    if (out.contains("seed") && out["seed"].get<long long>() < 0) {
        throw ConfigError("field 'seed' must be non-negative");
    }
    return out;
}

int run(int argc, char **argv) {
    CLI::App app{"Data re-uploading circuit simulator and Fourier analyzer",
                 "reupload"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<long long> seed;
    unsigned threads = 1;
    std::string data_path;

    std::vector<CLI::App *> subs;
    for (const char *name : {"simulate", "spectrum", "train", "benchmark"}) {
        auto *sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--seed", seed, "overrides the config seed");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--threads", threads, "worker threads (0 = all cores)");
        if (std::string(name) == "train") {
            sub->add_option("--data", data_path, "dataset CSV (x1..xn,f)");
        }
        subs.push_back(sub);
    }
    subs[0]->description("evaluate F(x, theta) on a grid or input list");
    subs[1]->description("count Fourier harmonics with both engines");
    subs[2]->description("fit a dataset with gradient descent");
    subs[3]->description("teacher-student benchmark or gamma sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kConfigError;
    }

    std::string sub;
    for (auto *s : subs) {
        if (s->parsed()) {
            sub = s->get_name();
        }
    }

    try {
        json raw;
        try {
            raw = json::parse(read_text(config_path));
        } catch (const json::parse_error &e) {
            throw ConfigError("config is not valid JSON: " + std::string(e.what()));
        } catch (const std::runtime_error &e) {
            throw ConfigError(e.what());
        }
        if (!raw.is_object()) {
            throw ConfigError("config must be a JSON object");
        }
        if (seed) {
            raw["seed"] = *seed;
        }
        if (!data_path.empty()) {
            raw["data"] = data_path;
        }
        json cfg;
        try {
            cfg = normalize_config(sub, raw);
        } catch (const json::exception &e) {
            throw ConfigError(e.what());
        }
        const fs::path out(out_dir);
        fs::create_directories(out);
        write_common(out, sub, cfg);
        if (sub == "simulate") {
            return cmd_simulate(cfg, out);
        }
        if (sub == "spectrum") {
            return cmd_spectrum(cfg, out, threads);
        }
        if (sub == "train") {
            return cmd_train(cfg, out, threads);
        }
        return cmd_benchmark(cfg, out, threads);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const GridError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DataError &e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kDataError;
    } catch (const CapacityError &e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return kShapeError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return kShapeError;
    } catch (const std::out_of_range &e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return kShapeError;
    } catch (const CrossCheckFailure &e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        return kCrossCheckFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCrossCheckFailed;
    }
}

} // namespace reupload::cli
