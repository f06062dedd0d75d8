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

#include <memory>
#include <vector>

#include "fsusy/config.hpp"
#include "fsusy/doublet.hpp"
#include "fsusy/replicas.hpp"
#include "fsusy/report.hpp"

namespace fsusy {

/// A fully built system: representation, fractional doublet and its k - 1
/// replicas.
struct System {
    int requested_d = 0;
    std::shared_ptr<const AlgebraRep> rep;
    FsusyDoublet doublet;
    std::vector<ReplicaDoublet> replicas;

    int order() const { return rep->order(); }
    int levels() const { return rep->levels(); }
};

System build_system(const StructureSpec &spec, int requested_d, RootBranch branch = RootBranch::kPrincipal);

/// The config as echoed into reports.
nlohmann::ordered_json config_echo(const RunConfig &cfg, const StructureSpec *spec, int effective_d);

/// Builds the system for `cfg` and runs every verification. Construction
/// failures are returned in the report rather than thrown; config errors
/// (invalid k, d, margin, tolerance, family) are thrown as Error(kConfig).
VerificationReport run_verification_suite(const RunConfig &cfg);

/// Verification entries for an already-built system.
ReportFragment verify_system(const System &system, int margin, const Tolerances &tol);

}  // namespace fsusy
