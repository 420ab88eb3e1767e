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
#include "reupload/random.hpp"

#include <array>
#include <vector>

namespace reupload {

namespace {
std::seed_seq make_seq(std::initializer_list<std::uint64_t> key,
                       std::vector<std::uint32_t> &words) {
    words.clear();
    for (auto k : key) {
        words.push_back(static_cast<std::uint32_t>(k & 0xffffffffu));
        words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    return std::seed_seq(words.begin(), words.end());
}
} // namespace

RngStream::RngStream(std::initializer_list<std::uint64_t> key) {
    std::vector<std::uint32_t> words;
    auto seq = make_seq(key, words);
    engine_.seed(seq);
}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key) {
    std::vector<std::uint32_t> words;
    auto seq = make_seq(key, words);
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

} // namespace reupload
