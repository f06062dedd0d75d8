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

#include <vector>

#include "fsusy/doublet.hpp"

namespace fsusy {

/// Square-root convention for the replica shift operators.
enum class RootBranch {
    /// Nonnegative real roots; a negative partner value in range is an error.
    kReal,
    /// Principal complex roots, so sqrt(-x) = i sqrt(x). The factorization
    /// identities keep holding; X(s)+ then equals the transpose of X(s)-
    /// rather than its adjoint at the affected levels.
    kPrincipal,
};

/// (n, sector) of a level whose partner value fell below zero.
struct NegativeLevel {
    int n;
    int sector;
    double value;
};

struct ShiftOperators {
    OperatorMatrix Xsm;
    OperatorMatrix Xsp;
    std::vector<NegativeLevel> negative_levels;
};

/// X(s)- = sum_{n=1..d-1} sqrt(H_s(n)) |n-1, s-1><n, s|,
/// X(s)+ = sum_{n=0..d-2} sqrt(H_s(n+1)) |n+1, s><n, s-1|, for 2 <= s <= k.
/// The n = 0 term of X(s)- is omitted (ground-state omission).
ShiftOperators build_shift_operators(const FsusyDoublet &doublet, int s, RootBranch branch = RootBranch::kReal);

/// Ordinary supersymmetric subsystem (h(s), q(s)) built from the adjacent
/// partners H_{s-1} and H_s.
struct ReplicaDoublet {
    int s = 0;
    OperatorMatrix Xsm;
    OperatorMatrix Xsp;
    OperatorMatrix qm;
    OperatorMatrix qp;
    OperatorMatrix h;
    std::vector<NegativeLevel> negative_levels;
};

/// q(s)- = X(s)- Pi_s, q(s)+ = X(s)+ Pi_{s-1},
/// h(s) = X(s)- X(s)+ Pi_{s-1} + X(s)+ X(s)- Pi_s.
ReplicaDoublet build_replica(const FsusyDoublet &doublet, int s, RootBranch branch = RootBranch::kReal);

/// All k - 1 replicas, s = 2..k.
std::vector<ReplicaDoublet> build_replicas(const FsusyDoublet &doublet, RootBranch branch = RootBranch::kReal);

/// Diagonal operator H_s(N) acting on every sector.
Matrix partner_operator(const FsusyDoublet &doublet, int s);

/// Factorization X(s)- X(s)+ = H_s(N+1) on sector s-1, the replica
/// decomposition h(s) = H_{s-1} Pi_{s-1} + H_s Pi_s (ground state |0, s>
/// excluded), both intertwining relations, and the ordinary supersymmetry
/// axioms of the replica.
ReportFragment verify_replica(const ReplicaDoublet &rd, const FsusyDoublet &doublet, int margin,
                              const Tolerances &tol = {});

/// Level-shift identity H_{s-1}(n-1) = H_s(n) for s = 2..k and
/// 1 <= n <= d-1-margin. The wrap pair (H_k against H_1) is reported as an
/// informative entry only.
ReportFragment check_isospectrality(const FsusyDoublet &doublet, int margin, const Tolerances &tol = {});

/// H = q(2)- q(2)+ + sum_{s=2..k} q(s)+ q(s)- on the safe window, with the
/// omitted ground states |0, s>, s = 2..k, excluded. For k = 2 also checks
/// h(2) = H.
ReportFragment verify_sum_identity(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas,
                                   int margin, const Tolerances &tol = {});

}  // namespace fsusy
