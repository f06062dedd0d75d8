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
#include <string>
#include <vector>

#include "fsusy/operator.hpp"
#include "fsusy/report.hpp"
#include "fsusy/suite.hpp"

namespace fsusy {

/// Shortest decimal form that round-trips the double.
std::string format_number(double value);

/// CSV with header `s,n,energy,replica_s`: one partner row per basis state
/// sorted by (s, n) with empty replica_s, then the diagonal of each h(s) on
/// its two sectors.
std::string spectrum_csv(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas);
void write_spectrum_csv(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas,
                        const std::filesystem::path &path);

/// Matrix Market coordinate complex general, nonzero entries in row-major order.
std::string matrix_market(const OperatorMatrix &op);
void write_matrix_market(const OperatorMatrix &op, const std::filesystem::path &path);

/// Every labeled operator of the system, in dump order.
std::vector<const OperatorMatrix *> system_operators(const System &system);

/// One `<label>.mtx` file per operator; returns the written paths.
std::vector<std::filesystem::path> dump_operators(const System &system, const std::filesystem::path &directory);

void write_text(const std::filesystem::path &path, const std::string &text);
void write_report(const VerificationReport &report, const std::filesystem::path &path);

}  // namespace fsusy
