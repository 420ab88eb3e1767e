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
 * @file spectrum.hpp
 * Partial Fourier decomposition of the signed network output.
 *
 * Every (layer, qubit) pair is a "slot" d = l * Q + q. A sign sequence
 * assigns each slot a value in {-2, 0, +2}; the matching frequency is
 * sum_d R_d * omega_d and the coefficient is <0|A(R)|0>, where A(R) is the
 * observable pulled back through the circuit one slot at a time.
 *
 * Two independent counters are provided: the symbolic engine evaluates each
 * A(R) on dense matrices, the numeric engine samples the output on a
 * periodic grid and takes a DFT.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "reupload/circuit.hpp"

namespace reupload {

/// Largest L * Q accepted by the symbolic engine (3^12 sequences).
inline constexpr int kMaxSlots = 12;
/// Largest Q accepted by the symbolic engine.
inline constexpr int kMaxSymbolicQubits = 10;

inline constexpr double kDefaultZeroTolerance = 1e-14;
inline constexpr double kDefaultPeakThreshold = 1e-11;

/// Raised when a request exceeds the symbolic memory guard.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a DFT grid cannot resolve the spectrum.
class GridError : public std::invalid_argument {
  public:
    GridError(const std::string &what, std::size_t required)
        : std::invalid_argument(what), required_(required) {}
    [[nodiscard]] std::size_t required() const { return required_; }

  private:
    std::size_t required_;
};

/// One entry per slot, each in {-2, 0, +2}.
using SignSequence = std::vector<int>;

struct HarmonicTerm {
    SignSequence sequence;
    std::vector<double> frequency;
    Complex coefficient;
};

enum class SpectrumMethod { Symbolic, NumericDFT, Factorized };

struct SpectrumReport {
    Architecture arch;
    std::string observable;
    SpectrumMethod method{SpectrumMethod::Symbolic};
    /// 2^(LQ) terms at the unitary level.
    double unitary_spectrum_size{0.0};
    /// 3^(LQ) sign sequences.
    double output_bound{0.0};
    /// 3^L.
    double chi{0.0};
    std::size_t num_harmonics{0};
    double gamma{0.0};
    /// Absolute for the symbolic engine, relative to the largest bin for the
    /// numeric one.
    double threshold{0.0};
    std::vector<std::size_t> samples_per_dim;
};

/// DFT bin for plotting: integer frequency and normalized amplitude.
struct DftBin {
    std::vector<int> frequency;
    Complex amplitude;
};

struct NumericSpectrum {
    SpectrumReport report;
    std::vector<DftBin> bins;
};

struct SymbolicSpectrum {
    SpectrumReport report;
    /// All 3^(LQ) terms, ordered by sequence index.
    std::vector<HarmonicTerm> terms;
};

std::string to_string(SpectrumMethod m);

/// Injective integer assignment: slot d drives input dimension d mod n with
/// weight 3^(d / n). Returns one n-vector per slot.
std::vector<std::vector<double>> canonical_frequencies(const Architecture &arch);
/// Copy of `theta` with every omega replaced by the canonical assignment.
ParameterSet with_canonical_frequencies(const Architecture &arch,
                                        const ParameterSet &theta);
/// Random alpha, beta in [-pi/2, pi/2] away from multiples of pi/4, with the
/// canonical frequencies.
ParameterSet generic_parameters(const Architecture &arch, std::uint64_t seed);

std::size_t num_sequences(const Architecture &arch);
SignSequence sequence_from_index(std::size_t index, std::size_t slots);
std::size_t index_of(const SignSequence &seq);
/// Frequency vector sum_d R_d omega_d.
std::vector<double> assemble_frequency(const SignSequence &seq,
                                       const ParameterSet &theta);
/// All 3^(LQ) sequences with their frequencies, ordered by index.
std::vector<HarmonicTerm> enumerate_frequencies(const Architecture &arch,
                                                const ParameterSet &theta);

/// c = <0|A(R)|0> for one sequence.
Complex symbolic_coefficient(const Architecture &arch, const ParameterSet &theta,
                             const ComplexMatrix &observable,
                             const SignSequence &seq);
Complex symbolic_coefficient(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec,
                             const SignSequence &seq);

/// Full coefficient table. Frequencies shared by several sequences are
/// summed before counting. `threads` = 0 uses the hardware concurrency.
SymbolicSpectrum symbolic_spectrum(const Architecture &arch,
                                   const ParameterSet &theta,
                                   const ComplexMatrix &observable,
                                   double zero_tolerance = kDefaultZeroTolerance,
                                   unsigned threads = 1);
SymbolicSpectrum symbolic_spectrum(const Architecture &arch,
                                   const ParameterSet &theta,
                                   const ObservableSpec &spec,
                                   double zero_tolerance = kDefaultZeroTolerance,
                                   unsigned threads = 1);

/// Number of distinct frequencies whose summed coefficient exceeds
/// `zero_tolerance`.
std::size_t count_harmonics(std::span<const HarmonicTerm> terms,
                            double zero_tolerance);

/// sum_k c_k exp(i Omega_k . x).
Complex reconstruct(std::span<const HarmonicTerm> terms,
                    std::span<const double> x);

/// Minimum samples per input dimension that resolve the spectrum of the
/// integer frequencies in `theta`. Throws std::invalid_argument when an
/// omega is not an integer.
std::vector<std::size_t> required_samples(const Architecture &arch,
                                          const ParameterSet &theta);

/// Samples the signed output on a periodic grid over [0, 2pi)^n and counts
/// DFT bins above `peak_threshold` times the largest amplitude.
/// `samples_per_dim` = 0 picks the minimum grid; a coarser grid throws
/// GridError.
NumericSpectrum numeric_spectrum(const Architecture &arch,
                                 const ParameterSet &theta,
                                 const ObservableSpec &spec,
                                 std::size_t samples_per_dim = 0,
                                 double peak_threshold = kDefaultPeakThreshold);
NumericSpectrum numeric_spectrum(const Architecture &arch,
                                 const ParameterSet &theta,
                                 const ComplexMatrix &observable,
                                 std::size_t samples_per_dim = 0,
                                 double peak_threshold = kDefaultPeakThreshold);

/// Gamma = N_h / N_p. Throws std::invalid_argument when N_h < 1.
double gamma_ratio(std::size_t num_harmonics, const Architecture &arch);

/// Single-qubit count for a depth-L circuit with observable `op` at generic
/// parameters.
std::size_t single_qubit_count(int layers, const SingleQubitOperator &op,
                               LayerKind kind);

/// Predicted N_h for a non-entangling circuit from the single-qubit counts.
/// Throws std::invalid_argument for entangling architectures.
std::size_t scaling_check(const Architecture &arch, const ObservableSpec &spec);

/// Exact count for a non-entangling circuit computed from per-qubit symbolic
/// spectra; reaches sizes beyond the memory guard.
std::size_t factorized_count(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec,
                             double zero_tolerance = kDefaultZeroTolerance);

/// Fills the descriptive fields of a report.
SpectrumReport make_report(const Architecture &arch, std::string observable,
                           SpectrumMethod method, std::size_t num_harmonics,
                           double threshold);

} // namespace reupload
