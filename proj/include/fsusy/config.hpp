// Copyright 2026 The fsusy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsusy/fock.hpp"

namespace fsusy {

using KeyValues = std::map<std::string, std::string>;

/// Everything a verification run needs. Populated from a flat `key = value`
/// file, then overridden by command-line flags of the same names.
struct RunConfig {
    int k = 0;
    /// Requested truncation; the run may shrink it to the effective dimension.
    int d = 0;
    std::string family = "constant";
    double a = 0.0;
    double b = 1.0;
    /// c_s for the constant family. Missing sectors take c0; c0 defaults to 1.
    std::map<int, double> constants;
    std::string table;
    bool table_extension = false;
    std::optional<int> margin;
    double tolerance = 1e-10;
    std::string out_report;
    std::string out_spectrum;
    std::string out_operators;

    int effective_margin() const { return margin.value_or(k); }

    /// Throws Error(kConfig) unless k >= 2, d >= 4, margin >= 1, tolerance > 0
    /// and the family is known.
    void validate() const;

    StructureSpec make_spec() const;
};

/// Config keys accepted in files and as flags.
const std::vector<std::string> &config_keys();

/// Parses `key = value` lines; `#` starts a comment.
KeyValues parse_key_values(const std::string &text);
KeyValues read_config_file(const std::filesystem::path &path);

/// Builds a config from merged key/values. `default_tolerance` is used when
/// no tolerance key is present.
RunConfig config_from_values(const KeyValues &values, double default_tolerance = 1e-10);

/// 1e-10 unless FSUSY_TOLERANCE holds a positive number.
double default_tolerance_from_env();

}  // namespace fsusy
