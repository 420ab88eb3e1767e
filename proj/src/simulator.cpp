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
#include "reupload/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reupload {

namespace {

Mat2 rotation(Axis axis, double half_angle) {
    const double c = std::cos(half_angle);
    const double s = std::sin(half_angle);
    if (axis == Axis::X) {
        return {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s},
                Complex{c, 0.0}};
    }
    return {Complex{c, 0.0}, Complex{-s, 0.0}, Complex{s, 0.0},
            Complex{c, 0.0}};
}

Mat4 adjoint(const Mat4 &g) {
    Mat4 out{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out[c * 4 + r] = std::conj(g[r * 4 + c]);
        }
    }
    return out;
}

// <lambda| P |phi> for P = sigma_axis on `bit`.
Complex pauli_overlap(std::span<const Complex> lambda,
                      std::span<const Complex> phi, Axis axis,
                      std::size_t bit) {
    const std::size_t mask = std::size_t{1} << bit;
    Complex acc{};
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if ((i & mask) != 0) {
            continue;
        }
        const Complex p0 = phi[i];
        const Complex p1 = phi[i | mask];
        if (axis == Axis::X) {
            acc += std::conj(lambda[i]) * p1 + std::conj(lambda[i | mask]) * p0;
        } else {
            // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
            acc += std::conj(lambda[i]) * Complex{0.0, -1.0} * p1 +
                   std::conj(lambda[i | mask]) * Complex{0.0, 1.0} * p0;
        }
    }
    return acc;
}

} // namespace

Simulator::Simulator(Architecture arch, const ParameterSet &theta,
                     ComplexMatrix observable)
    : arch_(arch), theta_(theta), observable_(std::move(observable)) {
    arch_.validate();
    theta_.check_shape(arch_);
    if (observable_.dim() != arch_.dim()) {
        throw std::invalid_argument("Simulator: observable has dimension " +
                                    std::to_string(observable_.dim()) +
                                    ", circuit has " +
                                    std::to_string(arch_.dim()));
    }
    psi_.resize(arch_.dim());
    aux_.resize(arch_.dim());
    diagonal_ = is_diagonal(observable_);
    if (diagonal_) {
        diag_.resize(arch_.dim());
        for (std::size_t i = 0; i < arch_.dim(); ++i) {
            diag_[i] = observable_(i, i).real();
        }
    }
    e2_ = to_mat4(two_qubit_entangler());
    const auto schedule = entangler_schedule(arch_.qubits, arch_.entangler_order);
    const bool standard = arch_.kind == LayerKind::Standard;
    for (int l = 0; l < arch_.layers; ++l) {
        for (int q = 0; q < arch_.qubits; ++q) {
            // the right factor of the layer product acts first
            Gate first{l, q, standard ? GateRole::Trainable : GateRole::Data,
                       Axis::Y, 0, 0};
            Gate second{l, q, standard ? GateRole::Data : GateRole::Trainable,
                        Axis::X, 0, 0};
            gates_.push_back(first);
            gates_.push_back(second);
        }
        if (arch_.has_entangler(l)) {
            for (auto [hi, lo] : schedule) {
                gates_.push_back(Gate{l, -1, GateRole::Data, Axis::X, hi, lo});
            }
        }
    }
}

void Simulator::set_parameters(const ParameterSet &theta) {
    theta.check_shape(arch_);
    theta_ = theta;
}

Simulator::Simulator(Architecture arch, const ParameterSet &theta,
                     const ObservableSpec &spec)
    : Simulator(arch, theta, build_observable(spec, arch.qubits)) {}

double Simulator::angle(const Gate &g, std::span<const double> x) const {
    if (g.role == GateRole::Trainable) {
        return theta_.alpha(g.layer, g.qubit);
    }
    double phi = theta_.beta(g.layer, g.qubit);
    for (int i = 0; i < arch_.input_dim; ++i) {
        phi += theta_.omega(g.layer, g.qubit, i) * x[i];
    }
    return phi;
}

void Simulator::run(std::span<const double> x, std::span<Complex> psi,
                    const Gate *shifted, double shift) const {
    if (x.size() != static_cast<std::size_t>(arch_.input_dim)) {
        throw std::invalid_argument("Simulator: input has dimension " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(arch_.input_dim));
    }
    std::fill(psi.begin(), psi.end(), Complex{});
    psi[0] = 1.0;
    for (const Gate &g : gates_) {
        if (g.qubit < 0) {
            apply_two_qubit(psi, e2_, g.hi, g.lo);
            continue;
        }
        double a = angle(g, x);
        if (&g == shifted) {
            a += shift;
        }
        apply_one_qubit(psi, rotation(g.axis, a), static_cast<std::size_t>(g.qubit));
    }
}

void Simulator::apply_observable(std::span<const Complex> psi,
                                 std::span<Complex> out) const {
    const std::size_t d = psi.size();
    if (diagonal_) {
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = diag_[i] * psi[i];
        }
        return;
    }
    for (std::size_t r = 0; r < d; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < d; ++c) {
            acc += observable_(r, c) * psi[c];
        }
        out[r] = acc;
    }
}

double Simulator::measure(std::span<const Complex> psi) const {
    if (diagonal_) {
        double acc = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            acc += diag_[i] * std::norm(psi[i]);
        }
        return acc;
    }
    apply_observable(psi, aux_);
    Complex acc{};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        acc += std::conj(psi[i]) * aux_[i];
    }
    return acc.real();
}

QuantumState Simulator::state(std::span<const double> x) const {
    std::vector<Complex> psi(arch_.dim());
    run(x, psi, nullptr, 0.0);
    return QuantumState(std::move(psi));
}

double Simulator::signed_output(std::span<const double> x) const {
    run(x, psi_, nullptr, 0.0);
    return measure(psi_);
}

double Simulator::signed_output_shifted(std::span<const double> x, int l, int q,
                                        GateRole role, double shift) const {
    const Gate *target = nullptr;
    for (const Gate &g : gates_) {
        if (g.layer == l && g.qubit == q && g.role == role) {
            target = &g;
            break;
        }
    }
    if (target == nullptr) {
        throw std::out_of_range("Simulator: no gate at the requested position");
    }
    run(x, psi_, target, shift);
    return measure(psi_);
}

double Simulator::signed_output_gradient(std::span<const double> x,
                                         std::span<double> grad) const {
    if (grad.size() != theta_.size()) {
        throw std::invalid_argument("Simulator: gradient buffer has wrong size");
    }
    const std::size_t d = arch_.dim();
    std::span<Complex> phi = psi_;
    std::span<Complex> lambda = aux_;
    run(x, phi, nullptr, 0.0);
    apply_observable(phi, lambda);
    Complex value{};
    for (std::size_t i = 0; i < d; ++i) {
        value += std::conj(phi[i]) * lambda[i];
    }

    static const Mat4 e2_dag = adjoint(to_mat4(two_qubit_entangler()));
    const auto n = static_cast<std::size_t>(arch_.input_dim);
    std::fill(grad.begin(), grad.end(), 0.0);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        const Gate &g = *it;
        if (g.qubit < 0) {
            apply_two_qubit(phi, e2_dag, g.hi, g.lo);
            apply_two_qubit(lambda, e2_dag, g.hi, g.lo);
            continue;
        }
        const auto bit = static_cast<std::size_t>(g.qubit);
        // d/dt exp(-i t P) = -i P exp(-i t P)
        const double d_angle =
            2.0 * pauli_overlap(lambda, phi, g.axis, bit).imag();
        const std::size_t base =
            (static_cast<std::size_t>(g.layer) * arch_.qubits + g.qubit) *
            (n + 2);
        if (g.role == GateRole::Trainable) {
            grad[base + n + 1] += d_angle;
        } else {
            grad[base + n] += d_angle;
            for (std::size_t i = 0; i < n; ++i) {
                grad[base + i] += d_angle * x[i];
            }
        }
        const Mat2 undo = rotation(g.axis, -angle(g, x));
        apply_one_qubit(phi, undo, bit);
        apply_one_qubit(lambda, undo, bit);
    }
    return value.real();
}

} // namespace reupload
