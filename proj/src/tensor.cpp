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
#include "reupload/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reupload {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("ComplexMatrix: expected " +
                                    std::to_string(dim_ * dim_) +
                                    " entries, got " +
                                    std::to_string(data_.size()));
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("ComplexMatrix: matrix must be square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix::+=: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix::-=: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

QuantumState::QuantumState(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {}

QuantumState QuantumState::zero_state(std::size_t num_qubits) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{});
    amps[0] = 1.0;
    return QuantumState(std::move(amps));
}

double QuantumState::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

QuantumState QuantumState::apply(const ComplexMatrix &m) const {
    if (m.dim() != dim()) {
        throw std::invalid_argument("QuantumState::apply: dimension mismatch");
    }
    std::vector<Complex> out(dim(), Complex{});
    for (std::size_t r = 0; r < dim(); ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim(); ++c) {
            acc += m(r, c) * amps_[c];
        }
        out[r] = acc;
    }
    return QuantumState(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex expectation(const QuantumState &state, const ComplexMatrix &m) {
    if (m.dim() != state.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    const std::size_t d = m.dim();
    Complex acc{};
    for (std::size_t r = 0; r < d; ++r) {
        Complex row{};
        for (std::size_t c = 0; c < d; ++c) {
            row += m(r, c) * state[c];
        }
        acc += std::conj(state[r]) * row;
    }
    return acc;
}

double real_expectation(const QuantumState &state, const ComplexMatrix &m,
                        double imag_tol) {
    const Complex v = expectation(state, m);
    if (std::abs(v.imag()) > imag_tol) {
        throw std::domain_error("real_expectation: imaginary residue " +
                                std::to_string(v.imag()) +
                                " exceeds tolerance");
    }
    return v.real();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return max_abs_diff(matmul(dagger(m), m),
                        ComplexMatrix::identity(m.dim())) <= tol;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return max_abs_diff(m, dagger(m)) <= tol;
}

bool is_diagonal(const ComplexMatrix &m, double tol) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j && std::abs(m(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix embed(const ComplexMatrix &op, std::size_t bit,
                    std::size_t num_qubits) {
    if (op.dim() != 2 || bit >= num_qubits) {
        throw std::invalid_argument("embed: expected a 2x2 operator on an "
                                    "existing qubit");
    }
    const std::size_t high = num_qubits - bit - 1;
    return kron(kron(ComplexMatrix::identity(std::size_t{1} << high), op),
                ComplexMatrix::identity(std::size_t{1} << bit));
}

Mat2 to_mat2(const ComplexMatrix &m) {
    if (m.dim() != 2) {
        throw std::invalid_argument("to_mat2: expected a 2x2 matrix");
    }
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Mat4 to_mat4(const ComplexMatrix &m) {
    if (m.dim() != 4) {
        throw std::invalid_argument("to_mat4: expected a 4x4 matrix");
    }
    Mat4 out{};
    std::copy(m.entries().begin(), m.entries().end(), out.begin());
    return out;
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() {
    return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
}
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
} // namespace pauli

void apply_one_qubit(std::span<Complex> psi, const Mat2 &g, std::size_t bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & mask) != 0) {
            continue;
        }
        const Complex a = psi[i];
        const Complex b = psi[i | mask];
        psi[i] = g[0] * a + g[1] * b;
        psi[i | mask] = g[2] * a + g[3] * b;
    }
}

void apply_two_qubit(std::span<Complex> psi, const Mat4 &g, std::size_t hi,
                     std::size_t lo) {
    const std::size_t mh = std::size_t{1} << hi;
    const std::size_t ml = std::size_t{1} << lo;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & (mh | ml)) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx{i, i | ml, i | mh, i | mh | ml};
        std::array<Complex, 4> in{};
        for (std::size_t k = 0; k < 4; ++k) {
            in[k] = psi[idx[k]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc{};
            for (std::size_t k = 0; k < 4; ++k) {
                acc += g[r * 4 + k] * in[k];
            }
            psi[idx[r]] = acc;
        }
    }
}

void sandwich_one_qubit(ComplexMatrix &m, const Mat2 &a, const Mat2 &b,
                        std::size_t bit) {
    const std::size_t d = m.dim();
    const std::size_t mask = std::size_t{1} << bit;
    // m <- m b (columns)
    for (std::size_t r = 0; r < d; ++r) {
        Complex *row = &m(r, 0);
        for (std::size_t c = 0; c < d; ++c) {
            if ((c & mask) != 0) {
                continue;
            }
            const Complex m0 = row[c];
            const Complex m1 = row[c | mask];
            row[c] = m0 * b[0] + m1 * b[2];
            row[c | mask] = m0 * b[1] + m1 * b[3];
        }
    }
    // m <- a^dagger m (rows)
    const Complex a00 = std::conj(a[0]);
    const Complex a01 = std::conj(a[1]);
    const Complex a10 = std::conj(a[2]);
    const Complex a11 = std::conj(a[3]);
    for (std::size_t r = 0; r < d; ++r) {
        if ((r & mask) != 0) {
            continue;
        }
        Complex *row0 = &m(r, 0);
        Complex *row1 = &m(r | mask, 0);
        for (std::size_t c = 0; c < d; ++c) {
            const Complex m0 = row0[c];
            const Complex m1 = row1[c];
            row0[c] = a00 * m0 + a10 * m1;
            row1[c] = a01 * m0 + a11 * m1;
        }
    }
}

void conjugate_two_qubit(ComplexMatrix &m, const Mat4 &g, std::size_t hi,
                         std::size_t lo) {
    const std::size_t d = m.dim();
    const std::size_t mh = std::size_t{1} << hi;
    const std::size_t ml = std::size_t{1} << lo;
    // m <- m g
    for (std::size_t r = 0; r < d; ++r) {
        Complex *row = &m(r, 0);
        for (std::size_t c = 0; c < d; ++c) {
            if ((c & (mh | ml)) != 0) {
                continue;
            }
            const std::array<std::size_t, 4> idx{c, c | ml, c | mh,
                                                 c | mh | ml};
            std::array<Complex, 4> in{};
            for (std::size_t k = 0; k < 4; ++k) {
                in[k] = row[idx[k]];
            }
            for (std::size_t j = 0; j < 4; ++j) {
                Complex acc{};
                for (std::size_t k = 0; k < 4; ++k) {
                    acc += in[k] * g[k * 4 + j];
                }
                row[idx[j]] = acc;
            }
        }
    }
    // m <- g^dagger m
    for (std::size_t r = 0; r < d; ++r) {
        if ((r & (mh | ml)) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx{r, r | ml, r | mh, r | mh | ml};
        for (std::size_t c = 0; c < d; ++c) {
            std::array<Complex, 4> in{};
            for (std::size_t k = 0; k < 4; ++k) {
                in[k] = m(idx[k], c);
            }
            for (std::size_t j = 0; j < 4; ++j) {
                Complex acc{};
                for (std::size_t k = 0; k < 4; ++k) {
                    acc += std::conj(g[k * 4 + j]) * in[k];
                }
                m(idx[j], c) = acc;
            }
        }
    }
}

} // namespace reupload
