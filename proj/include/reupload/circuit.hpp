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
 * @file circuit.hpp
 * Data re-uploading circuits: layer unitaries, entanglers, observables and
 * the dense reference evaluation of the network output.
 *
 * Rotation convention: R_x(2 phi) = exp(-i phi sigma_x) and
 * R_y(2 alpha) = exp(-i alpha sigma_y). Products over layers place later
 * layers on the left.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "reupload/random.hpp"
#include "reupload/tensor.hpp"

namespace reupload {

enum class LayerKind {
    Standard,    ///< R_x(2(w.x + b)) R_y(2a)
    Alternative, ///< R_x(2a) R_y(2(w.x + b))
};

enum class Entanglement {
    None,      ///< A0(L, Q)
    AllLayers, ///< A1(L, Q)
    LastLayer, ///< entangler only after layer L
};

/// Order of the nearest-neighbour E2 factors inside one entangler.
enum class EntanglerOrder {
    Descending, ///< factor i = Q-1 leftmost (applied last)
    Ascending,  ///< factor i = 1 leftmost
};

enum class Axis { X, Y };

struct Architecture {
    int layers{1};
    int qubits{1};
    int input_dim{1};
    LayerKind kind{LayerKind::Standard};
    Entanglement entanglement{Entanglement::None};
    EntanglerOrder entangler_order{EntanglerOrder::Descending};

    /// Throws std::invalid_argument on non-positive sizes.
    void validate() const;

    [[nodiscard]] bool entangled() const {
        return entanglement != Entanglement::None && qubits >= 2;
    }
    /// Whether an entangler follows layer `l` (0-based).
    [[nodiscard]] bool has_entangler(int l) const;
    /// N_p = L Q (n + 2).
    [[nodiscard]] std::size_t num_parameters() const;
    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << qubits; }
    /// "A0(L,Q)" / "A1(L,Q)" / "A1last(L,Q)", with "*" for the alternative
    /// layer.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const Architecture &, const Architecture &) = default;
};

struct LayerParams {
    std::vector<double> omega;
    double beta{0.0};
    double alpha{0.0};
};

/// Trainable parameters on an L x Q grid. The flat layout used by gradients
/// and serialization is, per (l, q) in row-major order, [omega_1..omega_n,
/// beta, alpha].
class ParameterSet {
  public:
    ParameterSet() = default;
    ParameterSet(int layers, int qubits, int input_dim);

    static ParameterSet zeros(const Architecture &arch);
    /// Every scalar uniform in [lo, hi).
    static ParameterSet random(const Architecture &arch, RngStream &rng,
                               double lo, double hi);
    static ParameterSet from_flat(const Architecture &arch,
                                  std::span<const double> flat);

    [[nodiscard]] int layers() const { return layers_; }
    [[nodiscard]] int qubits() const { return qubits_; }
    [[nodiscard]] int input_dim() const { return input_dim_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    LayerParams at(int l, int q) const;
    void set(int l, int q, const LayerParams &p);

    double &omega(int l, int q, int i) { return values_[offset(l, q) + i]; }
    double omega(int l, int q, int i) const {
        return values_[offset(l, q) + i];
    }
    double &beta(int l, int q) { return values_[offset(l, q) + input_dim_]; }
    double beta(int l, int q) const {
        return values_[offset(l, q) + input_dim_];
    }
    double &alpha(int l, int q) {
        return values_[offset(l, q) + input_dim_ + 1];
    }
    double alpha(int l, int q) const {
        return values_[offset(l, q) + input_dim_ + 1];
    }

    [[nodiscard]] std::span<const double> flat() const { return values_; }
    [[nodiscard]] std::span<double> flat() { return values_; }

    /// Throws std::invalid_argument when the grid does not match `arch`.
    void check_shape(const Architecture &arch) const;

    friend bool operator==(const ParameterSet &, const ParameterSet &) = default;

  private:
    [[nodiscard]] std::size_t offset(int l, int q) const {
        return (static_cast<std::size_t>(l) * qubits_ + q) *
               (static_cast<std::size_t>(input_dim_) + 2);
    }

    int layers_{0};
    int qubits_{0};
    int input_dim_{0};
    std::vector<double> values_;
};

/// O = u_o I + u_x sigma_x + u_y sigma_y + u_z sigma_z.
struct SingleQubitOperator {
    double u_o{0.0};
    double u_x{0.0};
    double u_y{0.0};
    double u_z{0.0};

    static SingleQubitOperator identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static SingleQubitOperator sigma_x() { return {0.0, 1.0, 0.0, 0.0}; }
    static SingleQubitOperator sigma_y() { return {0.0, 0.0, 1.0, 0.0}; }
    static SingleQubitOperator sigma_z() { return {0.0, 0.0, 0.0, 1.0}; }
    /// Parses "i", "x", "y" or "z" (case-insensitive).
    static SingleQubitOperator pauli(char label);

    [[nodiscard]] ComplexMatrix matrix() const;
    /// True when exactly one coefficient is 1 and the rest are 0.
    [[nodiscard]] bool is_pauli() const;
    /// "x", "y", "z", "i" for Paulis; "O(uo,ux,uy,uz)" otherwise.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const SingleQubitOperator &,
                           const SingleQubitOperator &) = default;
};

enum class ObservableKind {
    LocalSum,        ///< sum_q M_q, Pauli factors
    TensorProduct,   ///< prod_q M_q, Pauli factors
    GeneralPerQubit, ///< prod_q O_q with arbitrary coefficients
};

struct ObservableSpec {
    ObservableKind kind{ObservableKind::LocalSum};
    /// Entry q acts on qubit q + 1 (bit q).
    std::vector<SingleQubitOperator> per_qubit;

    static ObservableSpec local_sum(char pauli, int qubits);
    static ObservableSpec tensor_product(char pauli, int qubits);
    static ObservableSpec general(std::vector<SingleQubitOperator> ops);
    /// sigma_z^tot on `qubits` qubits.
    static ObservableSpec sigma_z_total(int qubits) {
        return local_sum('z', qubits);
    }

    /// Throws std::invalid_argument when inconsistent with `qubits`.
    void validate(int qubits) const;
    [[nodiscard]] std::string label() const;

    friend bool operator==(const ObservableSpec &,
                           const ObservableSpec &) = default;
};

struct HarmonicParts {
    ComplexMatrix plus;  ///< T+, multiplies exp(+i w.x)
    ComplexMatrix minus; ///< T-, multiplies exp(-i w.x)
};

ComplexMatrix build_rotation(Axis axis, double half_angle);
ComplexMatrix build_layer(const LayerParams &p, std::span<const double> x,
                          LayerKind kind);
HarmonicParts harmonic_parts(const LayerParams &p, LayerKind kind);
/// E2 = (I (x) I + i sigma_x (x) sigma_y) / sqrt(2).
ComplexMatrix two_qubit_entangler();
ComplexMatrix build_entangler(int qubits,
                              EntanglerOrder order = EntanglerOrder::Descending);
/// Bit positions (hi, lo) of the E2 factors in the order they act on a
/// state.
std::vector<std::pair<std::size_t, std::size_t>>
entangler_schedule(int qubits, EntanglerOrder order);
ComplexMatrix build_circuit(const Architecture &arch, const ParameterSet &theta,
                            std::span<const double> x);
ComplexMatrix build_observable(const ObservableSpec &spec, int qubits);
/// e^dagger m e; throws std::invalid_argument when e is not unitary.
ComplexMatrix conjugate_observable(const ComplexMatrix &m,
                                   const ComplexMatrix &e);

/// <phi(x)| M |phi(x)> with |phi(x)> = U(x, theta)|0...0>, via dense
/// matrices.
double evaluate_signed(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ComplexMatrix &m);
double evaluate_signed(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ObservableSpec &spec);
/// |evaluate_signed(...)|.
double evaluate_output(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ObservableSpec &spec);

std::string to_string(LayerKind kind);
std::string to_string(Entanglement e);
std::string to_string(EntanglerOrder order);
std::string to_string(ObservableKind kind);
LayerKind parse_layer_kind(const std::string &s);
Entanglement parse_entanglement(const std::string &s);
EntanglerOrder parse_entangler_order(const std::string &s);
ObservableKind parse_observable_kind(const std::string &s);

} // namespace reupload
