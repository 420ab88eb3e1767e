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
#include "reupload/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace reupload {

namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string &cell, double &out) {
    const std::string t = trim(cell);
    if (t.empty()) {
        return false;
    }
    const char *first = t.data();
    const char *last = t.data() + t.size();
    if (*first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::string sequence_label(const SignSequence &seq) {
    std::string s;
    for (std::size_t d = 0; d < seq.size(); ++d) {
        if (d > 0) {
            s += ' ';
        }
        s += std::to_string(seq[d]);
    }
    return s;
}

// Architecture labels contain commas.
std::string quoted(const std::string &s) { return "\"" + s + "\""; }

Json number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

Dataset parse_dataset_csv(const std::string &text, int expected_dim) {
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) {
        throw DataError("dataset is empty (missing header)", 0);
    }
    ++row;
    const auto header = split(trim(line), ',');
    if (header.size() < 2) {
        throw DataError("dataset header needs x1..xn and f columns", 1);
    }
    const int n = static_cast<int>(header.size()) - 1;
    for (int i = 0; i < n; ++i) {
        if (trim(header[static_cast<std::size_t>(i)]) != "x" + std::to_string(i + 1)) {
            throw DataError("dataset header column " + std::to_string(i + 1) +
                                " must be named x" + std::to_string(i + 1),
                            1);
        }
    }
    if (trim(header.back()) != "f") {
        throw DataError("dataset header last column must be named f", 1);
    }
    if (expected_dim >= 0 && n != expected_dim) {
        throw DataError("dataset has " + std::to_string(n) +
                            " input columns, expected " +
                            std::to_string(expected_dim),
                        1);
    }
    Dataset data;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(trim(line), ',');
        if (cells.size() != header.size()) {
            throw DataError("row " + std::to_string(row) + ": expected " +
                                std::to_string(header.size()) +
                                " columns, found " + std::to_string(cells.size()),
                            row);
        }
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double v = 0.0;
            if (!parse_number(cells[static_cast<std::size_t>(i)], v)) {
                throw DataError("row " + std::to_string(row) + ": column x" +
                                    std::to_string(i + 1) + " is not a number",
                                row);
            }
            if (v < 0.0 || v > 1.0) {
                throw DataError("row " + std::to_string(row) + ": column x" +
                                    std::to_string(i + 1) +
                                    " is outside [0, 1]",
                                row);
            }
            x[static_cast<std::size_t>(i)] = v;
        }
        double f = 0.0;
        if (!parse_number(cells.back(), f)) {
            throw DataError("row " + std::to_string(row) +
                                ": column f is not a number",
                            row);
        }
        data.inputs.push_back(std::move(x));
        data.targets.push_back(f);
    }
    if (data.targets.empty()) {
        throw DataError("dataset has no rows", 0);
    }
    return data;
}

Dataset read_dataset_csv(const std::filesystem::path &path, int expected_dim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open dataset " + path.string(), 0);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dataset_csv(ss.str(), expected_dim);
}

std::string dataset_to_csv(const Dataset &data) {
    std::string out;
    const int n = data.input_dim();
    for (int i = 0; i < n; ++i) {
        out += "x" + std::to_string(i + 1) + ",";
    }
    out += "f\n";
    for (std::size_t k = 0; k < data.size(); ++k) {
        for (double v : data.inputs[k]) {
            out += format_double(v) + ",";
        }
        out += format_double(data.targets[k]) + "\n";
    }
    return out;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json to_json(const Architecture &arch) {
    Json j;
    j["label"] = arch.label();
    j["layers"] = arch.layers;
    j["qubits"] = arch.qubits;
    j["input_dim"] = arch.input_dim;
    j["layer_kind"] = to_string(arch.kind);
    j["entanglement"] = to_string(arch.entanglement);
    j["entangler_order"] = to_string(arch.entangler_order);
    j["num_parameters"] = arch.num_parameters();
    return j;
}

Json to_json(const ParameterSet &theta) {
    Json j;
    j["layers"] = theta.layers();
    j["qubits"] = theta.qubits();
    j["input_dim"] = theta.input_dim();
    j["layout"] = "per (layer, qubit) row-major: omega_1..omega_n, beta, alpha";
    Json flat = Json::array();
    for (double v : theta.flat()) {
        flat.push_back(v);
    }
    j["values"] = flat;
    return j;
}

Json to_json(const ObservableSpec &spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    j["label"] = spec.label();
    Json ops = Json::array();
    for (const auto &op : spec.per_qubit) {
        ops.push_back({op.u_o, op.u_x, op.u_y, op.u_z});
    }
    j["per_qubit_u"] = ops;
    return j;
}

Json to_json(const SpectrumReport &r) {
    Json j;
    j["method"] = to_string(r.method);
    j["architecture"] = to_json(r.arch);
    j["observable"] = r.observable;
    j["unitary_spectrum_size"] = r.unitary_spectrum_size;
    j["output_bound"] = r.output_bound;
    j["chi"] = r.chi;
    j["num_harmonics"] = r.num_harmonics;
    j["gamma"] = r.gamma;
    j["threshold"] = r.threshold;
    if (!r.samples_per_dim.empty()) {
        j["samples_per_dim"] = r.samples_per_dim;
    }
    return j;
}

Json to_json(const TrainResult &result, bool with_history) {
    Json j;
    j["seed"] = result.seed;
    j["best_cost"] = number(result.best_cost);
    j["best_restart"] = result.best_restart;
    j["best_theta"] = to_json(result.best_theta);
    Json restarts = Json::array();
    for (const auto &r : result.restarts) {
        Json rj;
        rj["index"] = r.index;
        rj["final_cost"] = number(r.final_cost);
        rj["iterations"] = r.iterations;
        rj["aborted"] = r.aborted;
        if (r.aborted) {
            rj["abort_reason"] = r.abort_reason;
        }
        if (with_history) {
            Json h = Json::array();
            for (double c : r.history) {
                h.push_back(number(c));
            }
            rj["history"] = h;
        }
        restarts.push_back(rj);
    }
    j["restarts"] = restarts;
    return j;
}

Json to_json(const BenchmarkReport &report) {
    Json j;
    j["teacher"] = report.teacher;
    j["samples"] = report.samples;
    j["realizations"] = report.realizations;
    j["restarts"] = report.restarts;
    j["master_seed"] = report.master_seed;
    j["aggregate_definition"] =
        "mean_cost/std_cost: best-of-R per realization, population std; "
        "mean_all/std_all: every non-aborted restart";
    Json aggs = Json::array();
    for (const auto &a : report.aggregates) {
        Json aj;
        aj["student"] = a.student;
        aj["label"] = a.label;
        aj["architecture"] = to_json(a.arch);
        aj["mean_cost"] = number(a.mean_cost);
        aj["std_cost"] = number(a.std_cost);
        aj["min_cost"] = number(a.min_cost);
        aj["mean_all"] = number(a.mean_all);
        aj["std_all"] = number(a.std_all);
        aj["realizations_used"] = a.realizations_used;
        aj["restarts_used"] = a.restarts_used;
        aj["excluded_trials"] = a.excluded_trials;
        aj["aborted_restarts"] = a.aborted_restarts;
        aggs.push_back(aj);
    }
    j["aggregates"] = aggs;
    Json trials = Json::array();
    for (const auto &t : report.trials) {
        Json tj;
        tj["realization"] = t.realization;
        tj["student"] = t.student;
        tj["seed"] = t.seed;
        tj["excluded"] = t.excluded;
        if (t.excluded) {
            tj["reason"] = t.reason;
        }
        tj["best_cost"] = number(t.best_cost);
        tj["best_restart"] = t.best_restart;
        Json costs = Json::array();
        for (double c : t.restart_costs) {
            costs.push_back(number(c));
        }
        tj["restart_costs"] = costs;
        trials.push_back(tj);
    }
    j["trials"] = trials;
    return j;
}

std::string coefficients_to_csv(const SymbolicSpectrum &spectrum) {
    const std::size_t n =
        spectrum.terms.empty() ? 0 : spectrum.terms.front().frequency.size();
    std::string out = "sequence";
    for (std::size_t i = 0; i < n; ++i) {
        out += ",omega_" + std::to_string(i + 1);
    }
    out += ",re,im,abs\n";
    for (const auto &t : spectrum.terms) {
        out += sequence_label(t.sequence);
        for (double w : t.frequency) {
            out += "," + format_double(w);
        }
        out += "," + format_double(t.coefficient.real()) + "," +
               format_double(t.coefficient.imag()) + "," +
               format_double(std::abs(t.coefficient)) + "\n";
    }
    return out;
}

std::string dft_to_csv(const NumericSpectrum &spectrum) {
    const std::size_t n =
        spectrum.bins.empty() ? 0 : spectrum.bins.front().frequency.size();
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        out += "omega_" + std::to_string(i + 1) + ",";
    }
    out += "re,im,abs\n";
    for (const auto &b : spectrum.bins) {
        for (int w : b.frequency) {
            out += std::to_string(w) + ",";
        }
        out += format_double(b.amplitude.real()) + "," +
               format_double(b.amplitude.imag()) + "," +
               format_double(std::abs(b.amplitude)) + "\n";
    }
    return out;
}

std::string loss_history_to_csv(const TrainResult &result) {
    std::string out = "restart,iteration,cost\n";
    for (const auto &r : result.restarts) {
        for (std::size_t i = 0; i < r.history.size(); ++i) {
            out += std::to_string(r.index) + "," + std::to_string(i) + "," +
                   format_double(r.history[i]) + "\n";
        }
    }
    return out;
}

std::string trials_to_csv(const BenchmarkReport &report) {
    std::string out =
        "realization,student,label,restart,cost,is_best,excluded\n";
    for (const auto &t : report.trials) {
        const std::string label =
            report.aggregates.at(static_cast<std::size_t>(t.student)).label;
        for (std::size_t r = 0; r < t.restart_costs.size(); ++r) {
            out += std::to_string(t.realization) + "," +
                   std::to_string(t.student) + "," + quoted(label) + "," +
                   std::to_string(r) + "," + format_double(t.restart_costs[r]) +
                   "," +
                   (static_cast<int>(r) == t.best_restart ? "1" : "0") + "," +
                   (t.excluded ? "1" : "0") + "\n";
        }
    }
    return out;
}

std::string aggregates_to_csv(const BenchmarkReport &report) {
    std::string out = "student,label,layers,qubits,entanglement,mean_cost,"
                      "std_cost,min_cost,mean_all,std_all,realizations_used,"
                      "restarts_used,excluded_trials,aborted_restarts\n";
    for (const auto &a : report.aggregates) {
        out += std::to_string(a.student) + "," + quoted(a.label) + "," +
               std::to_string(a.arch.layers) + "," +
               std::to_string(a.arch.qubits) + "," +
               to_string(a.arch.entanglement) + "," +
               format_double(a.mean_cost) + "," + format_double(a.std_cost) +
               "," + format_double(a.min_cost) + "," +
               format_double(a.mean_all) + "," + format_double(a.std_all) +
               "," + std::to_string(a.realizations_used) + "," +
               std::to_string(a.restarts_used) + "," +
               std::to_string(a.excluded_trials) + "," +
               std::to_string(a.aborted_restarts) + "\n";
    }
    return out;
}

std::string prediction_map_to_csv(const PredictionMap &map) {
    std::string out;
    for (int i = 0; i < map.input_dim; ++i) {
        out += "x" + std::to_string(i + 1) + ",";
    }
    out += "value\n";
    for (std::size_t k = 0; k < map.points.size(); ++k) {
        for (double v : map.points[k]) {
            out += format_double(v) + ",";
        }
        out += format_double(map.values[k]) + "\n";
    }
    return out;
}

std::string gamma_to_csv(const std::vector<GammaPoint> &points) {
    std::string out =
        "label,entanglement,layers,qubits,input_dim,n_h,n_p,gamma,method\n";
    for (const auto &p : points) {
        out += quoted(p.arch.label()) + "," + to_string(p.arch.entanglement) +
               "," +
               std::to_string(p.arch.layers) + "," +
               std::to_string(p.arch.qubits) + "," +
               std::to_string(p.arch.input_dim) + "," +
               std::to_string(p.num_harmonics) + "," +
               std::to_string(p.num_parameters) + "," + format_double(p.gamma) +
               "," + p.method + "\n";
    }
    return out;
}

} // namespace reupload
