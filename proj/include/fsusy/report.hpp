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

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fsusy {

/// Tolerances used by the verify_* routines. `base` is the run tolerance;
/// identities that hold to rounding are held to the tighter of `base` and
/// their pinned bound, so lowering `base` tightens every check.
struct Tolerances {
    double base = 1e-10;

    double loose() const { return base; }
    double strict() const { return std::min(base, 1e-12); }
    double offdiag() const { return std::min(base, 1e-13); }
    static constexpr double exact() { return 0.0; }
};

struct ReportEntry {
    std::string identity;
    /// Group of relations the identity belongs to ("wk-algebra", "replica", ...).
    std::string relation;
    /// Absent when the quantity could not be computed.
    std::optional<double> residual;
    double tolerance = 0.0;
    bool pass = false;
    bool informative = false;
    std::string window;
    std::string note;
};

using ReportFragment = std::vector<ReportEntry>;

/// Entry that passes iff residual <= tolerance (NaN never passes).
ReportEntry make_entry(std::string identity, std::string relation, double residual, double tolerance,
                       std::string window, bool informative = false);

void append(ReportFragment &into, const ReportFragment &from);

struct VerificationReport {
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<ReportEntry> entries;
    /// Set when the system could not be constructed.
    std::optional<std::string> construction_error;
    std::string version;
    std::string timestamp;

    /// True iff construction succeeded and every non-informative entry passed.
    bool verdict() const;
    int failed_count() const;

    nlohmann::ordered_json to_json() const;
    /// One line per entry, residuals to 3 significant digits.
    std::string summary() const;
};

nlohmann::ordered_json entry_to_json(const ReportEntry &e);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

const char *library_version();

}  // namespace fsusy
