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
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace reupload {

/// Deterministic random stream keyed by a tuple of integers, e.g.
/// (seed, restart) or (seed, teacher, student, restart). Streams with
/// different keys are independent, so jobs can run in any order.
///
/// Backed by std::mt19937_64 seeded through std::seed_seq; uniform reals are
/// formed from the top 53 bits so draws are identical across standard
/// libraries.
class RngStream {
  public:
    explicit RngStream(std::initializer_list<std::uint64_t> key);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 engine_;
};

/// Folds a key into a single 64-bit seed for nested streams.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key);

} // namespace reupload
