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
 * @file io.hpp
 * CSV and JSON serialization. Numbers are written with %.17g and a '.'
 * decimal separator regardless of locale, so files round-trip exactly.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "reupload/bench.hpp"
#include "reupload/circuit.hpp"
#include "reupload/spectrum.hpp"
#include "reupload/trainer.hpp"

namespace reupload {

using Json = nlohmann::ordered_json;

/// Malformed dataset file; `row` is the 1-based line number (0 for the
/// header or file-level problems).
class DataError : public std::runtime_error {
  public:
    DataError(const std::string &what, std::size_t row)
        : std::runtime_error(what), row_(row) {}
    [[nodiscard]] std::size_t row() const { return row_; }

  private:
    std::size_t row_;
};

/// %.17g, locale independent.
std::string format_double(double v);

/// Reads "x1,...,xn,f" CSV. `expected_dim` < 0 accepts any n.
Dataset read_dataset_csv(const std::filesystem::path &path, int expected_dim = -1);
Dataset parse_dataset_csv(const std::string &text, int expected_dim = -1);
std::string dataset_to_csv(const Dataset &data);

void write_text(const std::filesystem::path &path, const std::string &text);
std::string read_text(const std::filesystem::path &path);

Json to_json(const Architecture &arch);
Json to_json(const ParameterSet &theta);
Json to_json(const ObservableSpec &spec);
Json to_json(const SpectrumReport &report);
Json to_json(const TrainResult &result, bool with_history = false);
Json to_json(const BenchmarkReport &report);

/// Columns: sequence, omega_1..omega_n, re, im, abs.
std::string coefficients_to_csv(const SymbolicSpectrum &spectrum);
/// Columns: omega_1..omega_n, re, im, abs.
std::string dft_to_csv(const NumericSpectrum &spectrum);
/// Columns: restart, iteration, cost.
std::string loss_history_to_csv(const TrainResult &result);
/// One row per trial: realization, student, label, restart, cost, best.
std::string trials_to_csv(const BenchmarkReport &report);
/// One row per student with both aggregates.
std::string aggregates_to_csv(const BenchmarkReport &report);
/// Columns: x1..xn, value.
std::string prediction_map_to_csv(const PredictionMap &map);
/// Columns: label, entanglement, layers, qubits, input_dim, n_h, n_p, gamma,
/// method.
std::string gamma_to_csv(const std::vector<GammaPoint> &points);

} // namespace reupload
