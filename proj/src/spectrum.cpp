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
#include "reupload/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

#include "reupload/simulator.hpp"

namespace reupload {

namespace {

constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

std::size_t pow3(int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= 3;
    }
    return r;
}

void check_guard(const Architecture &arch) {
    const int slots = arch.layers * arch.qubits;
    if (slots > kMaxSlots || arch.qubits > kMaxSymbolicQubits) {
        throw CapacityError(
            "symbolic engine refuses L*Q = " + std::to_string(slots) +
            " with Q = " + std::to_string(arch.qubits) + " (limits: L*Q <= " +
            std::to_string(kMaxSlots) +
            ", Q <= " + std::to_string(kMaxSymbolicQubits) + ")");
    }
}

// Per-slot data needed to pull the observable back through the circuit.
class Recursion {
  public:
    Recursion(const Architecture &arch, const ParameterSet &theta,
              const ComplexMatrix &observable)
        : arch_(arch), slots_(arch.layers * arch.qubits) {
        arch_.validate();
        theta.check_shape(arch_);
        if (observable.dim() != arch_.dim()) {
            throw std::invalid_argument(
                "observable dimension does not match the architecture");
        }
        for (int l = 0; l < arch_.layers; ++l) {
            for (int q = 0; q < arch_.qubits; ++q) {
                const HarmonicParts h = harmonic_parts(theta.at(l, q), arch_.kind);
                plus_.push_back(to_mat2(h.plus));
                minus_.push_back(to_mat2(h.minus));
            }
        }
        if (arch_.entangled()) {
            e2_ = to_mat4(two_qubit_entangler());
            schedule_ = entangler_schedule(arch_.qubits, arch_.entangler_order);
        }
        top_ = observable;
        if (arch_.has_entangler(arch_.layers - 1)) {
            conjugate(top_);
        }
    }

    [[nodiscard]] int slots() const { return slots_; }
    [[nodiscard]] const ComplexMatrix &top() const { return top_; }

    // E^dagger O E, with E = f_k ... f_1 for the state schedule f_1..f_k.
    void conjugate(ComplexMatrix &m) const {
        for (auto it = schedule_.rbegin(); it != schedule_.rend(); ++it) {
            conjugate_two_qubit(m, e2_, it->first, it->second);
        }
    }

    // out <- H^a_d[in], followed by the entangler of the next layer down
    // when slot d opens its layer.
    void descend(const ComplexMatrix &in, int d, int choice, ComplexMatrix &out,
                 ComplexMatrix &scratch) const {
        const auto bit = static_cast<std::size_t>(d % arch_.qubits);
        const Mat2 &tp = plus_[d];
        const Mat2 &tm = minus_[d];
        out = in;
        if (choice == 0) {
            scratch = in;
            sandwich_one_qubit(out, tp, tp, bit);
            sandwich_one_qubit(scratch, tm, tm, bit);
            out += scratch;
        } else if (choice > 0) {
            sandwich_one_qubit(out, tm, tp, bit);
        } else {
            sandwich_one_qubit(out, tp, tm, bit);
        }
        const int layer = d / arch_.qubits;
        if (d % arch_.qubits == 0 && layer > 0 && arch_.has_entangler(layer - 1)) {
            conjugate(out);
        }
    }

    // <0| H^a_0[m] |0>; slot 0 acts on bit 0 and never precedes an
    // entangler.
    [[nodiscard]] Complex leaf(const ComplexMatrix &m, int choice) const {
        auto corner = [&](const Mat2 &a, const Mat2 &b) {
            Complex acc{};
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    acc += std::conj(a[r * 2]) * m(r, c) * b[c * 2];
                }
            }
            return acc;
        };
        if (choice == 0) {
            return corner(plus_[0], plus_[0]) + corner(minus_[0], minus_[0]);
        }
        return choice > 0 ? corner(minus_[0], plus_[0])
                          : corner(plus_[0], minus_[0]);
    }

    // Visits every sequence below slot `d` starting from `m`, writing
    // coefficients at index base + sum (choice + 1) 3^slot.
    void walk(const ComplexMatrix &m, int d, std::size_t base,
              std::vector<Complex> &out, std::vector<ComplexMatrix> &buffers,
              ComplexMatrix &scratch) const {
        const std::size_t stride = pow3(d);
        for (int choice = -1; choice <= 1; ++choice) {
            const std::size_t index =
                base + static_cast<std::size_t>(choice + 1) * stride;
            if (d == 0) {
                out[index] = leaf(m, choice);
                continue;
            }
            descend(m, d, choice, buffers[d], scratch);
            walk(buffers[d], d - 1, index, out, buffers, scratch);
        }
    }

  private:
    Architecture arch_;
    int slots_;
    std::vector<Mat2> plus_;
    std::vector<Mat2> minus_;
    Mat4 e2_{};
    std::vector<std::pair<std::size_t, std::size_t>> schedule_;
    ComplexMatrix top_;
};

void check_sequence(const SignSequence &seq, std::size_t slots) {
    if (seq.size() != slots) {
        throw std::invalid_argument("sign sequence has length " +
                                    std::to_string(seq.size()) + ", expected " +
                                    std::to_string(slots));
    }
    for (int r : seq) {
        if (r != -2 && r != 0 && r != 2) {
            throw std::invalid_argument("sign sequence entry " +
                                        std::to_string(r) +
                                        " is not one of -2, 0, 2");
        }
    }
}

bool near_multiple_of_quarter_pi(double v, double eps) {
    const double q = std::numbers::pi / 4.0;
    const double r = v / q;
    return std::abs(r - std::round(r)) * q < eps;
}

} // namespace

std::string to_string(SpectrumMethod m) {
    switch (m) {
    case SpectrumMethod::Symbolic:
        return "symbolic";
    case SpectrumMethod::NumericDFT:
        return "numeric_dft";
    case SpectrumMethod::Factorized:
        return "factorized";
    }
    return "unknown";
}

std::vector<std::vector<double>> canonical_frequencies(const Architecture &arch) {
    arch.validate();
    const int slots = arch.layers * arch.qubits;
    const int n = arch.input_dim;
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(slots));
    for (int d = 0; d < slots; ++d) {
        std::vector<double> w(static_cast<std::size_t>(n), 0.0);
        w[static_cast<std::size_t>(d % n)] = static_cast<double>(pow3(d / n));
        out.push_back(std::move(w));
    }
    return out;
}

ParameterSet with_canonical_frequencies(const Architecture &arch,
                                        const ParameterSet &theta) {
    theta.check_shape(arch);
    ParameterSet out = theta;
    const auto freqs = canonical_frequencies(arch);
    for (int l = 0; l < arch.layers; ++l) {
        for (int q = 0; q < arch.qubits; ++q) {
            const auto &w = freqs[static_cast<std::size_t>(l * arch.qubits + q)];
            for (int i = 0; i < arch.input_dim; ++i) {
                out.omega(l, q, i) = w[static_cast<std::size_t>(i)];
            }
        }
    }
    return out;
}

ParameterSet generic_parameters(const Architecture &arch, std::uint64_t seed) {
    arch.validate();
    RngStream rng{seed, 0x5045u};
    ParameterSet theta = ParameterSet::zeros(arch);
    const double half_pi = std::numbers::pi / 2.0;
    auto draw = [&] {
        double v = 0.0;
        do {
            v = rng.uniform(-half_pi, half_pi);
        } while (near_multiple_of_quarter_pi(v, 1e-3));
        return v;
    };
    for (int l = 0; l < arch.layers; ++l) {
        for (int q = 0; q < arch.qubits; ++q) {
            theta.beta(l, q) = draw();
            theta.alpha(l, q) = draw();
        }
    }
    return with_canonical_frequencies(arch, theta);
}

std::size_t num_sequences(const Architecture &arch) {
    return pow3(arch.layers * arch.qubits);
}

SignSequence sequence_from_index(std::size_t index, std::size_t slots) {
    SignSequence seq(slots);
    for (std::size_t d = 0; d < slots; ++d) {
        seq[d] = 2 * static_cast<int>(index % 3) - 2;
        index /= 3;
    }
    return seq;
}

std::size_t index_of(const SignSequence &seq) {
    std::size_t index = 0;
    for (std::size_t d = seq.size(); d-- > 0;) {
        index = index * 3 + static_cast<std::size_t>(seq[d] / 2 + 1);
    }
    return index;
}

std::vector<double> assemble_frequency(const SignSequence &seq,
                                       const ParameterSet &theta) {
    const int q_count = theta.qubits();
    std::vector<double> omega(static_cast<std::size_t>(theta.input_dim()), 0.0);
    for (std::size_t d = 0; d < seq.size(); ++d) {
        if (seq[d] == 0) {
            continue;
        }
        const int l = static_cast<int>(d) / q_count;
        const int q = static_cast<int>(d) % q_count;
        for (int i = 0; i < theta.input_dim(); ++i) {
            omega[static_cast<std::size_t>(i)] += seq[d] * theta.omega(l, q, i);
        }
    }
    return omega;
}

std::vector<HarmonicTerm> enumerate_frequencies(const Architecture &arch,
                                                const ParameterSet &theta) {
    theta.check_shape(arch);
    const auto slots = static_cast<std::size_t>(arch.layers * arch.qubits);
    const std::size_t count = num_sequences(arch);
    std::vector<HarmonicTerm> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        HarmonicTerm t;
        t.sequence = sequence_from_index(k, slots);
        t.frequency = assemble_frequency(t.sequence, theta);
        out.push_back(std::move(t));
    }
    return out;
}

Complex symbolic_coefficient(const Architecture &arch, const ParameterSet &theta,
                             const ComplexMatrix &observable,
                             const SignSequence &seq) {
    check_guard(arch);
    const Recursion rec(arch, theta, observable);
    check_sequence(seq, static_cast<std::size_t>(rec.slots()));
    ComplexMatrix current = rec.top();
    ComplexMatrix next;
    ComplexMatrix scratch;
    for (int d = rec.slots() - 1; d > 0; --d) {
        rec.descend(current, d, seq[static_cast<std::size_t>(d)] / 2, next,
                    scratch);
        std::swap(current, next);
    }
    return rec.leaf(current, seq[0] / 2);
}

Complex symbolic_coefficient(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec,
                             const SignSequence &seq) {
    return symbolic_coefficient(arch, theta, build_observable(spec, arch.qubits),
                                seq);
}

SymbolicSpectrum symbolic_spectrum(const Architecture &arch,
                                   const ParameterSet &theta,
                                   const ComplexMatrix &observable,
                                   double zero_tolerance, unsigned threads) {
    check_guard(arch);
    const Recursion rec(arch, theta, observable);
    const int slots = rec.slots();
    const std::size_t count = num_sequences(arch);
    std::vector<Complex> coeffs(count);

    // Split into independent subtrees by fixing the top one or two slots.
    const int fixed = std::min(slots - 1, 2);
    const std::size_t tasks = pow3(fixed);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        std::vector<ComplexMatrix> buffers(static_cast<std::size_t>(slots));
        ComplexMatrix current;
        ComplexMatrix scratch;
        for (std::size_t t = next_task++; t < tasks; t = next_task++) {
            current = rec.top();
            std::size_t base = 0;
            std::size_t rest = t;
            for (int j = 0; j < fixed; ++j) {
                const int d = slots - 1 - j;
                const int choice = static_cast<int>(rest % 3) - 1;
                rest /= 3;
                base += static_cast<std::size_t>(choice + 1) * pow3(d);
                rec.descend(current, d, choice, buffers[static_cast<std::size_t>(d)],
                            scratch);
                current = buffers[static_cast<std::size_t>(d)];
            }
            rec.walk(current, slots - 1 - fixed, base, coeffs, buffers, scratch);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    SymbolicSpectrum out;
    out.terms = enumerate_frequencies(arch, theta);
    for (std::size_t k = 0; k < count; ++k) {
        out.terms[k].coefficient = coeffs[k];
    }
    out.report = make_report(arch, "matrix", SpectrumMethod::Symbolic,
                             count_harmonics(out.terms, zero_tolerance),
                             zero_tolerance);
    return out;
}

SymbolicSpectrum symbolic_spectrum(const Architecture &arch,
                                   const ParameterSet &theta,
                                   const ObservableSpec &spec,
                                   double zero_tolerance, unsigned threads) {
    spec.validate(arch.qubits);
    auto out = symbolic_spectrum(arch, theta, build_observable(spec, arch.qubits),
                                 zero_tolerance, threads);
    out.report.observable = spec.label();
    return out;
}

std::size_t count_harmonics(std::span<const HarmonicTerm> terms,
                            double zero_tolerance) {
    std::vector<std::size_t> order(terms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return terms[a].frequency < terms[b].frequency;
    });
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        Complex sum{};
        std::size_t j = i;
        while (j < order.size() &&
               terms[order[j]].frequency == terms[order[i]].frequency) {
            sum += terms[order[j]].coefficient;
            ++j;
        }
        if (std::abs(sum) > zero_tolerance) {
            ++count;
        }
        i = j;
    }
    return count;
}

Complex reconstruct(std::span<const HarmonicTerm> terms,
                    std::span<const double> x) {
    Complex acc{};
    for (const auto &t : terms) {
        if (t.frequency.size() != x.size()) {
            throw std::invalid_argument("reconstruct: input dimension mismatch");
        }
        double phase = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            phase += t.frequency[i] * x[i];
        }
        acc += t.coefficient * std::polar(1.0, phase);
    }
    return acc;
}

std::vector<std::size_t> required_samples(const Architecture &arch,
                                          const ParameterSet &theta) {
    theta.check_shape(arch);
    std::vector<std::size_t> out;
    for (int i = 0; i < arch.input_dim; ++i) {
        double reach = 0.0;
        for (int l = 0; l < arch.layers; ++l) {
            for (int q = 0; q < arch.qubits; ++q) {
                const double w = theta.omega(l, q, i);
                if (std::abs(w - std::round(w)) > 1e-12) {
                    throw std::invalid_argument(
                        "numeric spectrum needs integer frequencies; omega(" +
                        std::to_string(l) + "," + std::to_string(q) + "," +
                        std::to_string(i) + ") = " + std::to_string(w));
                }
                reach += 2.0 * std::abs(std::round(w));
            }
        }
        out.push_back(2 * static_cast<std::size_t>(reach) + 1);
    }
    return out;
}

NumericSpectrum numeric_spectrum(const Architecture &arch,
                                 const ParameterSet &theta,
                                 const ComplexMatrix &observable,
                                 std::size_t samples_per_dim,
                                 double peak_threshold) {
    const auto required = required_samples(arch, theta);
    const std::size_t need = *std::max_element(required.begin(), required.end());
    std::vector<std::size_t> dims = required;
    if (samples_per_dim != 0) {
        if (samples_per_dim < need) {
            throw GridError("DFT grid of " + std::to_string(samples_per_dim) +
                                " samples per dimension is too coarse; at least " +
                                std::to_string(need) + " are required",
                            need);
        }
        std::fill(dims.begin(), dims.end(), samples_per_dim);
    }
    std::size_t total = 1;
    for (auto d : dims) {
        total *= d;
        if (total > kMaxGridPoints) {
            throw CapacityError("DFT grid exceeds " +
                                std::to_string(kMaxGridPoints) + " points");
        }
    }

    const Simulator sim(arch, theta, observable);
    const auto n = dims.size();
    // Row-major grid: dimension 0 varies slowest, matching FFTW's layout.
    fftw_complex *buffer = fftw_alloc_complex(total);
    std::vector<double> x(n);
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = n; i-- > 0;) {
            idx[i] = rest % dims[i];
            rest /= dims[i];
            x[i] = 2.0 * std::numbers::pi * static_cast<double>(idx[i]) /
                   static_cast<double>(dims[i]);
        }
        buffer[flat][0] = sim.signed_output(x);
        buffer[flat][1] = 0.0;
    }

    std::vector<int> shape(dims.begin(), dims.end());
    {
        static std::mutex planner_mutex;
        fftw_plan plan = nullptr;
        {
            const std::lock_guard lock(planner_mutex);
            plan = fftw_plan_dft(static_cast<int>(n), shape.data(), buffer, buffer,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        const std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(plan);
    }

    NumericSpectrum out;
    out.bins.reserve(total);
    double largest = 0.0;
    const double scale = 1.0 / static_cast<double>(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        DftBin bin;
        bin.frequency.resize(n);
        std::size_t rest = flat;
        for (std::size_t i = n; i-- > 0;) {
            const auto k = static_cast<long long>(rest % dims[i]);
            rest /= dims[i];
            const auto size = static_cast<long long>(dims[i]);
            bin.frequency[i] = static_cast<int>(k <= size / 2 ? k : k - size);
        }
        bin.amplitude = Complex{buffer[flat][0], buffer[flat][1]} * scale;
        largest = std::max(largest, std::abs(bin.amplitude));
        out.bins.push_back(std::move(bin));
    }
    fftw_free(buffer);

    std::size_t peaks = 0;
    for (const auto &b : out.bins) {
        if (largest > 0.0 && std::abs(b.amplitude) > peak_threshold * largest) {
            ++peaks;
        }
    }
    out.report = make_report(arch, "matrix", SpectrumMethod::NumericDFT, peaks,
                             peak_threshold);
    out.report.samples_per_dim = dims;
    return out;
}

NumericSpectrum numeric_spectrum(const Architecture &arch,
                                 const ParameterSet &theta,
                                 const ObservableSpec &spec,
                                 std::size_t samples_per_dim,
                                 double peak_threshold) {
    spec.validate(arch.qubits);
    auto out = numeric_spectrum(arch, theta, build_observable(spec, arch.qubits),
                                samples_per_dim, peak_threshold);
    out.report.observable = spec.label();
    return out;
}

double gamma_ratio(std::size_t num_harmonics, const Architecture &arch) {
    if (num_harmonics < 1) {
        throw std::invalid_argument("gamma_ratio needs at least one harmonic");
    }
    return static_cast<double>(num_harmonics) /
           static_cast<double>(arch.num_parameters());
}

std::size_t single_qubit_count(int layers, const SingleQubitOperator &op,
                               LayerKind kind) {
    if (layers < 1) {
        throw std::invalid_argument("single_qubit_count needs L >= 1");
    }
    const bool yz = op.u_y != 0.0 || op.u_z != 0.0;
    const bool x = op.u_x != 0.0;
    const bool o = op.u_o != 0.0;
    const std::size_t base = pow3(layers - 1);
    if (kind == LayerKind::Standard) {
        std::size_t count = yz ? 2 * base : 0;
        if (x) {
            count += base;
        } else if (o) {
            count += 1;
        }
        return count;
    }
    std::size_t count = 0;
    if (yz) {
        count = 2 * base;
    } else if (x) {
        count = layers == 1 ? 2 : 4 * pow3(layers - 2);
    }
    return count + (o ? 1 : 0);
}

namespace {

// Whether the zero-frequency term of the single-qubit output survives at
// generic parameters.
bool has_constant_term(const SingleQubitOperator &op, LayerKind kind) {
    if (kind == LayerKind::Standard) {
        return op.u_x != 0.0 || op.u_o != 0.0;
    }
    return op.u_o != 0.0;
}

bool non_entangling(const Architecture &arch) { return !arch.entangled(); }

} // namespace

std::size_t scaling_check(const Architecture &arch, const ObservableSpec &spec) {
    arch.validate();
    spec.validate(arch.qubits);
    if (!non_entangling(arch)) {
        throw std::invalid_argument(
            "scaling_check has no closed form for entangling architectures; "
            "use symbolic_spectrum");
    }
    if (spec.kind == ObservableKind::LocalSum) {
        std::size_t count = 0;
        bool constant = false;
        for (const auto &op : spec.per_qubit) {
            const bool c = has_constant_term(op, arch.kind);
            count += single_qubit_count(arch.layers, op, arch.kind) - (c ? 1 : 0);
            constant = constant || c;
        }
        return count + (constant ? 1 : 0);
    }
    std::size_t count = 1;
    for (const auto &op : spec.per_qubit) {
        count *= single_qubit_count(arch.layers, op, arch.kind);
    }
    return count;
}

std::size_t factorized_count(const Architecture &arch, const ParameterSet &theta,
                             const ObservableSpec &spec, double zero_tolerance) {
    arch.validate();
    spec.validate(arch.qubits);
    theta.check_shape(arch);
    if (!non_entangling(arch)) {
        throw std::invalid_argument(
            "factorized_count applies to non-entangling architectures only");
    }
    Architecture single = arch;
    single.qubits = 1;
    single.entanglement = Entanglement::None;

    std::size_t product = 1;
    std::size_t sum = 0;
    Complex constant{};
    for (int q = 0; q < arch.qubits; ++q) {
        ParameterSet sub = ParameterSet::zeros(single);
        for (int l = 0; l < arch.layers; ++l) {
            sub.set(l, 0, theta.at(l, q));
        }
        const auto spec_q =
            ObservableSpec::general({spec.per_qubit[static_cast<std::size_t>(q)]});
        const auto sym = symbolic_spectrum(single, sub, spec_q, zero_tolerance);
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < sym.terms.size(); ++k) {
            const bool is_zero_seq = std::all_of(
                sym.terms[k].sequence.begin(), sym.terms[k].sequence.end(),
                [](int r) { return r == 0; });
            if (is_zero_seq) {
                constant += sym.terms[k].coefficient;
                if (std::abs(sym.terms[k].coefficient) > zero_tolerance) {
                    ++nonzero;
                }
                continue;
            }
            if (std::abs(sym.terms[k].coefficient) > zero_tolerance) {
                ++nonzero;
                ++sum;
            }
        }
        product *= nonzero;
    }
    if (spec.kind == ObservableKind::LocalSum) {
        return sum + (std::abs(constant) > zero_tolerance ? 1 : 0);
    }
    return product;
}

SpectrumReport make_report(const Architecture &arch, std::string observable,
                           SpectrumMethod method, std::size_t num_harmonics,
                           double threshold) {
    SpectrumReport r;
    r.arch = arch;
    r.observable = std::move(observable);
    r.method = method;
    const int slots = arch.layers * arch.qubits;
    r.unitary_spectrum_size = std::pow(2.0, slots);
    r.output_bound = std::pow(3.0, slots);
    r.chi = std::pow(3.0, arch.layers);
    r.num_harmonics = num_harmonics;
    r.gamma = num_harmonics > 0 ? gamma_ratio(num_harmonics, arch) : 0.0;
    r.threshold = threshold;
    return r;
}

} // namespace reupload
