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
 * @file tensor.hpp
 * Dense complex matrices and pure states on Q-qubit Hilbert spaces.
 *
 * Basis ordering: qubit 1 is the least-significant bit of the
 * computational-basis index, so in a Kronecker product the factor acting on
 * qubit 1 is the rightmost one. Local kernels take 0-based bit positions.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace reupload {

using Complex = std::complex<double>;

/// Row-major 2x2 block used by the local kernels.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 block; index bit 1 is the high qubit, bit 0 the low one.
using Mat4 = std::array<Complex, 16>;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool empty() const noexcept { return dim_ == 0; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t dim_{0};
    std::vector<Complex> data_;
};

class QuantumState {
  public:
    QuantumState() = default;
    explicit QuantumState(std::vector<Complex> amplitudes);

    /// |0...0> on `num_qubits` qubits.
    static QuantumState zero_state(std::size_t num_qubits);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;
    /// Returns m|psi>.
    [[nodiscard]] QuantumState apply(const ComplexMatrix &m) const;

  private:
    std::vector<Complex> amps_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);

/// <psi|m|psi>; m need not be Hermitian.
Complex expectation(const QuantumState &state, const ComplexMatrix &m);
/// Real part of <psi|m|psi>; throws std::domain_error when the imaginary
/// residue exceeds `imag_tol`.
double real_expectation(const QuantumState &state, const ComplexMatrix &m,
                        double imag_tol = 1e-10);

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool is_unitary(const ComplexMatrix &m, double tol = 1e-12);
bool is_hermitian(const ComplexMatrix &m, double tol = 1e-12);
bool is_diagonal(const ComplexMatrix &m, double tol = 0.0);

/// Lifts a 2x2 operator acting on 0-based `bit` into a `num_qubits` space.
ComplexMatrix embed(const ComplexMatrix &op, std::size_t bit,
                    std::size_t num_qubits);

Mat2 to_mat2(const ComplexMatrix &m);
Mat4 to_mat4(const ComplexMatrix &m);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
} // namespace pauli

// Local kernels. They act in place and touch only the addressed qubits.

/// psi <- g psi, with g acting on `bit`.
void apply_one_qubit(std::span<Complex> psi, const Mat2 &g, std::size_t bit);
/// psi <- g psi, with g acting on (`hi`, `lo`).
void apply_two_qubit(std::span<Complex> psi, const Mat4 &g, std::size_t hi,
                     std::size_t lo);

/// m <- a^dagger m b, with a and b acting on `bit`.
void sandwich_one_qubit(ComplexMatrix &m, const Mat2 &a, const Mat2 &b,
                        std::size_t bit);
/// m <- g^dagger m g, with g acting on (`hi`, `lo`).
void conjugate_two_qubit(ComplexMatrix &m, const Mat4 &g, std::size_t hi,
                         std::size_t lo);

} // namespace reupload
