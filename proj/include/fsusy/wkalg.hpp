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

#include "fsusy/fock.hpp"
#include "fsusy/operator.hpp"
#include "fsusy/report.hpp"

namespace fsusy {

/// Matrix realization of the generalized Weyl-Heisenberg algebra on the
/// truncated graded Fock space. Immutable once built.
struct AlgebraRep {
    StructureSpec spec;
    GradedBasis basis;
    StructureFunction F;
    OperatorMatrix Xm;
    OperatorMatrix Xp;
    OperatorMatrix N;
    OperatorMatrix K;
    std::vector<OperatorMatrix> projectors;

    int order() const { return basis.order(); }
    int levels() const { return basis.levels(); }
    /// Pi_s with s reduced modulo k (so s = k selects Pi_0).
    const Matrix &projector(long long s) const { return projectors[wrap_sector(s, order())].entries; }
};

/// Pi_s = (1/k) sum_t q^(-s t) K^t for s = 0..k-1.
std::vector<OperatorMatrix> build_projectors(const OperatorMatrix &K, int k);

/// Materializes X-, X+, N, K and the projectors. Raising out of the top
/// level n = d - 1 is truncated to zero.
AlgebraRep build_rep(const StructureSpec &spec, const GradedBasis &basis, const StructureFunction &F);

/// Solves the structure function for `requested_d` levels, shrinks to the
/// effective dimension and builds the representation there.
AlgebraRep build_rep(const StructureSpec &spec, int requested_d);

/// Residuals of the five defining relations of the algebra for arbitrary
/// operators over `basis`; shared by the Fock and tensor realizations.
ReportFragment algebra_relation_entries(const Matrix &Xm, const Matrix &Xp, const Matrix &N, const Matrix &K,
                                        const std::vector<OperatorMatrix> &projectors, const StructureSpec &spec,
                                        const GradedBasis &basis, const Window &window, const Tolerances &tol,
                                        const std::string &prefix, bool informative);

/// [X-, X+] = sum_s f_s(N) Pi_s, [N, X+-] = +-X+-, K X+- = q^(+-1) X+- K,
/// [K, N] = 0 and K^k = 1, each measured on the safe window.
ReportFragment verify_wk_relations(const AlgebraRep &rep, int margin, const Tolerances &tol = {});

/// Structural invariants of the representation: X+ = X-^dagger, N and Pi_s
/// Hermitian, K unitary, Pi_s Pi_t = delta_st Pi_s, sum_s Pi_s = 1.
ReportFragment verify_rep_structure(const AlgebraRep &rep, const Tolerances &tol = {});

}  // namespace fsusy
