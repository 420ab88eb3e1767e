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
#include "reupload/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace reupload {

namespace {

constexpr Complex kI{0.0, 1.0};

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

} // namespace

void Architecture::validate() const {
    if (layers < 1 || qubits < 1 || input_dim < 1) {
        throw std::invalid_argument(
            "Architecture: layers, qubits and input_dim must be positive");
    }
    if (qubits > 20) {
        throw std::invalid_argument("Architecture: at most 20 qubits");
    }
}

bool Architecture::has_entangler(int l) const {
    if (!entangled()) {
        return false;
    }
    return entanglement == Entanglement::AllLayers || l == layers - 1;
}

std::size_t Architecture::num_parameters() const {
    return static_cast<std::size_t>(layers) * qubits * (input_dim + 2);
}

std::string Architecture::label() const {
    std::string head = "A0";
    if (entanglement == Entanglement::AllLayers) {
        head = "A1";
    } else if (entanglement == Entanglement::LastLayer) {
        head = "A1last";
    }
    if (kind == LayerKind::Alternative) {
        head += "*";
    }
    return head + "(" + std::to_string(layers) + "," + std::to_string(qubits) +
           ")";
}

ParameterSet::ParameterSet(int layers, int qubits, int input_dim)
    : layers_(layers), qubits_(qubits), input_dim_(input_dim),
      values_(static_cast<std::size_t>(layers) * qubits * (input_dim + 2),
              0.0) {}

ParameterSet ParameterSet::zeros(const Architecture &arch) {
    arch.validate();
    return ParameterSet(arch.layers, arch.qubits, arch.input_dim);
}

ParameterSet ParameterSet::random(const Architecture &arch, RngStream &rng,
                                  double lo, double hi) {
    ParameterSet p = zeros(arch);
    for (auto &v : p.values_) {
        v = rng.uniform(lo, hi);
    }
    return p;
}

ParameterSet ParameterSet::from_flat(const Architecture &arch,
                                     std::span<const double> flat) {
    ParameterSet p = zeros(arch);
    if (flat.size() != p.values_.size()) {
        throw std::invalid_argument(
            "ParameterSet::from_flat: expected " +
            std::to_string(p.values_.size()) + " values, got " +
            std::to_string(flat.size()));
    }
    p.values_.assign(flat.begin(), flat.end());
    return p;
}

LayerParams ParameterSet::at(int l, int q) const {
    const std::size_t o = offset(l, q);
    LayerParams p;
    p.omega.assign(values_.begin() + static_cast<std::ptrdiff_t>(o),
                   values_.begin() + static_cast<std::ptrdiff_t>(o) +
                       input_dim_);
    p.beta = values_[o + input_dim_];
    p.alpha = values_[o + input_dim_ + 1];
    return p;
}

void ParameterSet::set(int l, int q, const LayerParams &p) {
    if (p.omega.size() != static_cast<std::size_t>(input_dim_)) {
        throw std::invalid_argument("ParameterSet::set: omega has length " +
                                    std::to_string(p.omega.size()) +
                                    ", expected " +
                                    std::to_string(input_dim_));
    }
    const std::size_t o = offset(l, q);
    for (int i = 0; i < input_dim_; ++i) {
        values_[o + i] = p.omega[i];
    }
    values_[o + input_dim_] = p.beta;
    values_[o + input_dim_ + 1] = p.alpha;
}

void ParameterSet::check_shape(const Architecture &arch) const {
    if (layers_ != arch.layers || qubits_ != arch.qubits ||
        input_dim_ != arch.input_dim) {
        std::ostringstream msg;
        msg << "parameter grid " << layers_ << "x" << qubits_ << " (n="
            << input_dim_ << ") does not match architecture " << arch.label()
            << " (n=" << arch.input_dim << ")";
        throw std::invalid_argument(msg.str());
    }
}

SingleQubitOperator SingleQubitOperator::pauli(char label) {
    switch (std::tolower(static_cast<unsigned char>(label))) {
    case 'i':
        return identity();
    case 'x':
        return sigma_x();
    case 'y':
        return sigma_y();
    case 'z':
        return sigma_z();
    default:
        throw std::invalid_argument(std::string("unknown Pauli label '") +
                                    label + "'");
    }
}

ComplexMatrix SingleQubitOperator::matrix() const {
    return pauli::identity() * Complex{u_o} + pauli::x() * Complex{u_x} +
           pauli::y() * Complex{u_y} + pauli::z() * Complex{u_z};
}

bool SingleQubitOperator::is_pauli() const {
    int ones = 0;
    int zeros = 0;
    for (double u : {u_o, u_x, u_y, u_z}) {
        ones += (u == 1.0);
        zeros += (u == 0.0);
    }
    return ones == 1 && zeros == 3;
}

std::string SingleQubitOperator::label() const {
    if (is_pauli()) {
        if (u_o == 1.0) {
            return "i";
        }
        if (u_x == 1.0) {
            return "x";
        }
        return u_y == 1.0 ? "y" : "z";
    }
    std::ostringstream s;
    s << "O(" << u_o << "," << u_x << "," << u_y << "," << u_z << ")";
    return s.str();
}

ObservableSpec ObservableSpec::local_sum(char p, int qubits) {
    return {ObservableKind::LocalSum,
            std::vector<SingleQubitOperator>(
                static_cast<std::size_t>(qubits),
                SingleQubitOperator::pauli(p))};
}

ObservableSpec ObservableSpec::tensor_product(char p, int qubits) {
    return {ObservableKind::TensorProduct,
            std::vector<SingleQubitOperator>(
                static_cast<std::size_t>(qubits),
                SingleQubitOperator::pauli(p))};
}

ObservableSpec ObservableSpec::general(std::vector<SingleQubitOperator> ops) {
    return {ObservableKind::GeneralPerQubit, std::move(ops)};
}

void ObservableSpec::validate(int qubits) const {
    if (per_qubit.size() != static_cast<std::size_t>(qubits)) {
        throw std::invalid_argument(
            "ObservableSpec: " + std::to_string(per_qubit.size()) +
            " per-qubit operators for " + std::to_string(qubits) + " qubits");
    }
    if (kind != ObservableKind::GeneralPerQubit) {
        for (const auto &op : per_qubit) {
            if (!op.is_pauli()) {
                throw std::invalid_argument(
                    "ObservableSpec: " + to_string(kind) +
                    " requires Pauli factors, got " + op.label());
            }
        }
    }
}

std::string ObservableSpec::label() const {
    std::string out = kind == ObservableKind::LocalSum ? "sum[" : "prod[";
    for (std::size_t q = 0; q < per_qubit.size(); ++q) {
        out += (q ? "," : "") + per_qubit[q].label();
    }
    return out + "]";
}

ComplexMatrix build_rotation(Axis axis, double half_angle) {
    const double c = std::cos(half_angle);
    const double s = std::sin(half_angle);
    if (axis == Axis::X) {
        return {{c, -kI * s}, {-kI * s, c}};
    }
    return {{c, -s}, {s, c}};
}

ComplexMatrix build_layer(const LayerParams &p, std::span<const double> x,
                          LayerKind kind) {
    if (x.size() != p.omega.size()) {
        throw std::invalid_argument("build_layer: input has dimension " +
                                    std::to_string(x.size()) +
                                    " but omega has " +
                                    std::to_string(p.omega.size()));
    }
    const double phi = dot(p.omega, x) + p.beta;
    if (kind == LayerKind::Standard) {
        return build_rotation(Axis::X, phi) * build_rotation(Axis::Y, p.alpha);
    }
    return build_rotation(Axis::X, p.alpha) * build_rotation(Axis::Y, phi);
}

HarmonicParts harmonic_parts(const LayerParams &p, LayerKind kind) {
    const Complex up = std::exp(kI * p.beta);
    const Complex down = std::exp(-kI * p.beta);
    if (kind == LayerKind::Standard) {
        const double tp = std::cos(p.alpha) + std::sin(p.alpha);
        const double tm = std::cos(p.alpha) - std::sin(p.alpha);
        ComplexMatrix plus{{tm, -tp}, {-tm, tp}};
        ComplexMatrix minus{{tp, tm}, {tp, tm}};
        return {plus * (0.5 * up), minus * (0.5 * down)};
    }
    // R_y(2 phi) = e^{i phi} (I - sigma_y)/2 + e^{-i phi} (I + sigma_y)/2
    const ComplexMatrix rx = build_rotation(Axis::X, p.alpha);
    const ComplexMatrix proj_minus = (pauli::identity() - pauli::y()) * 0.5;
    const ComplexMatrix proj_plus = (pauli::identity() + pauli::y()) * 0.5;
    return {rx * proj_minus * up, rx * proj_plus * down};
}

ComplexMatrix two_qubit_entangler() {
    const ComplexMatrix id4 = ComplexMatrix::identity(4);
    return (id4 + kron(pauli::x(), pauli::y()) * kI) * (1.0 / std::sqrt(2.0));
}

std::vector<std::pair<std::size_t, std::size_t>>
entangler_schedule(int qubits, EntanglerOrder order) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (qubits < 2) {
        return out;
    }
    const auto q = static_cast<std::size_t>(qubits);
    // factor i (1-based) places E2 on bits (Q - i, Q - i - 1)
    for (std::size_t i = 1; i < q; ++i) {
        out.emplace_back(q - i, q - i - 1);
    }
    if (order == EntanglerOrder::Ascending) {
        std::reverse(out.begin(), out.end());
    }
    return out;
}

ComplexMatrix build_entangler(int qubits, EntanglerOrder order) {
    if (qubits < 2) {
        throw std::invalid_argument("build_entangler: needs at least 2 qubits");
    }
    const auto q = static_cast<std::size_t>(qubits);
    const ComplexMatrix e2 = two_qubit_entangler();
    ComplexMatrix out = ComplexMatrix::identity(std::size_t{1} << q);
    for (auto [hi, lo] : entangler_schedule(qubits, order)) {
        const std::size_t above = q - hi - 1;
        const ComplexMatrix factor =
            kron(kron(ComplexMatrix::identity(std::size_t{1} << above), e2),
                 ComplexMatrix::identity(std::size_t{1} << lo));
        out = factor * out;
    }
    return out;
}

ComplexMatrix build_circuit(const Architecture &arch, const ParameterSet &theta,
                            std::span<const double> x) {
    arch.validate();
    theta.check_shape(arch);
    if (x.size() != static_cast<std::size_t>(arch.input_dim)) {
        throw std::invalid_argument("build_circuit: input has dimension " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(arch.input_dim));
    }
    ComplexMatrix entangler;
    if (arch.entangled()) {
        entangler = build_entangler(arch.qubits, arch.entangler_order);
    }
    ComplexMatrix u = ComplexMatrix::identity(arch.dim());
    for (int l = 0; l < arch.layers; ++l) {
        ComplexMatrix layer = build_layer(theta.at(l, 0), x, arch.kind);
        for (int q = 1; q < arch.qubits; ++q) {
            layer = kron(build_layer(theta.at(l, q), x, arch.kind), layer);
        }
        if (arch.has_entangler(l)) {
            layer = entangler * layer;
        }
        u = layer * u;
    }
    return u;
}

ComplexMatrix build_observable(const ObservableSpec &spec, int qubits) {
    spec.validate(qubits);
    const auto q = static_cast<std::size_t>(qubits);
    if (spec.kind == ObservableKind::LocalSum) {
        ComplexMatrix out(std::size_t{1} << q);
        for (std::size_t b = 0; b < q; ++b) {
            out += embed(spec.per_qubit[b].matrix(), b, q);
        }
        return out;
    }
    ComplexMatrix out = spec.per_qubit[0].matrix();
    for (std::size_t b = 1; b < q; ++b) {
        out = kron(spec.per_qubit[b].matrix(), out);
    }
    return out;
}

ComplexMatrix conjugate_observable(const ComplexMatrix &m,
                                   const ComplexMatrix &e) {
    if (m.dim() != e.dim()) {
        throw std::invalid_argument("conjugate_observable: dimension mismatch");
    }
    if (!is_unitary(e, 1e-10)) {
        throw std::invalid_argument(
            "conjugate_observable: conjugating operator is not unitary");
    }
    return dagger(e) * m * e;
}

double evaluate_signed(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ComplexMatrix &m) {
    const ComplexMatrix u = build_circuit(arch, theta, x);
    const QuantumState phi =
        QuantumState::zero_state(static_cast<std::size_t>(arch.qubits)).apply(u);
    return real_expectation(phi, m);
}

double evaluate_signed(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ObservableSpec &spec) {
    return evaluate_signed(arch, theta, x, build_observable(spec, arch.qubits));
}

double evaluate_output(const Architecture &arch, const ParameterSet &theta,
                       std::span<const double> x, const ObservableSpec &spec) {
    return std::abs(evaluate_signed(arch, theta, x, spec));
}

std::string to_string(LayerKind kind) {
    return kind == LayerKind::Standard ? "standard" : "alternative";
}

std::string to_string(Entanglement e) {
    switch (e) {
    case Entanglement::None:
        return "none";
    case Entanglement::AllLayers:
        return "all";
    case Entanglement::LastLayer:
        return "last";
    }
    return "none";
}

std::string to_string(EntanglerOrder order) {
    return order == EntanglerOrder::Descending ? "descending" : "ascending";
}

std::string to_string(ObservableKind kind) {
    switch (kind) {
    case ObservableKind::LocalSum:
        return "local_sum";
    case ObservableKind::TensorProduct:
        return "tensor_product";
    case ObservableKind::GeneralPerQubit:
        return "general";
    }
    return "local_sum";
}

LayerKind parse_layer_kind(const std::string &s) {
    if (s == "standard") {
        return LayerKind::Standard;
    }
    if (s == "alternative") {
        return LayerKind::Alternative;
    }
    throw std::invalid_argument("unknown layer kind '" + s + "'");
}

Entanglement parse_entanglement(const std::string &s) {
    if (s == "none") {
        return Entanglement::None;
    }
    if (s == "all") {
        return Entanglement::AllLayers;
    }
    if (s == "last") {
        return Entanglement::LastLayer;
    }
    throw std::invalid_argument("unknown entanglement '" + s + "'");
}

EntanglerOrder parse_entangler_order(const std::string &s) {
    if (s == "descending") {
        return EntanglerOrder::Descending;
    }
    if (s == "ascending") {
        return EntanglerOrder::Ascending;
    }
    throw std::invalid_argument("unknown entangler order '" + s + "'");
}

ObservableKind parse_observable_kind(const std::string &s) {
    if (s == "local_sum") {
        return ObservableKind::LocalSum;
    }
    if (s == "tensor_product") {
        return ObservableKind::TensorProduct;
    }
    if (s == "general") {
        return ObservableKind::GeneralPerQubit;
    }
    throw std::invalid_argument("unknown observable kind '" + s + "'");
}

} // namespace reupload
