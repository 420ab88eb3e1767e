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
 * @file cli.hpp
 * Command-line front end: simulate, spectrum, train and benchmark runs
 * driven by flat JSON configs.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace reupload::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kCrossCheckFailed = 1,
    kConfigError = 2,
    kShapeError = 3,
    kDataError = 4,
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Validates `raw` against the schema of `subcommand`, fills defaults and
/// returns the normalized config (sorted keys). Throws ConfigError naming
/// the offending field.
nlohmann::json normalize_config(const std::string &subcommand,
                                const nlohmann::json &raw);

/// Entry point; returns the process exit code.
int run(int argc, char **argv);

} // namespace reupload::cli
