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

// Helpers for driving the command-line tool from tests.

#pragma once

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace fsusy::cli_support {

inline std::string cli_path() { return FSUSY_CLI_PATH; }
inline std::filesystem::path golden_dir() { return FSUSY_GOLDEN_DIR; }

/// Runs the tool with `args` through the shell, discarding its output, and
/// returns the exit status (-1 if it did not exit normally).
inline int run_cli(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + cli_path() + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

inline nlohmann::json load_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

/// Compares a report against a golden one, ignoring the build block. Numeric
/// `residual` values match to 1e-13 absolute; everything else must be equal.
/// Returns the first mismatch, if any.
inline std::optional<std::string> golden_mismatch(nlohmann::json actual, nlohmann::json golden) {
    actual.erase("build");
    golden.erase("build");
    if (actual.size() != golden.size()) return "top-level keys differ";
    for (const auto &key : {"config", "construction_error", "verdict"})
        if (actual.value(key, nlohmann::json()) != golden.value(key, nlohmann::json()))
            return std::string("field '") + key + "' differs";
    const auto &a = actual["entries"];
    const auto &g = golden["entries"];
    if (!a.is_array() || !g.is_array() || a.size() != g.size()) return "entry count differs";
    for (std::size_t i = 0; i < a.size(); ++i) {
        nlohmann::json ea = a[i], eg = g[i];
        const auto ra = ea["residual"], rg = eg["residual"];
        ea.erase("residual");
        eg.erase("residual");
        if (ea != eg) return "entry " + std::to_string(i) + " (" + eg.value("identity", "") + ") differs";
        if (ra.is_number() != rg.is_number()) return "entry " + std::to_string(i) + " residual type differs";
        if (ra.is_number() && std::abs(ra.get<double>() - rg.get<double>()) > 1e-13)
            return "entry " + std::to_string(i) + " residual differs";
        if (!ra.is_number() && ra != rg) return "entry " + std::to_string(i) + " residual differs";
    }
    return std::nullopt;
}

}  // namespace fsusy::cli_support
