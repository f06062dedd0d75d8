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

#include <string>
#include <utility>
#include <vector>

#include "fsusy/wkalg.hpp"

namespace fsusy {

/// k-fermion pair on C^k: f+ is the unit shift |t> -> |t+1>, f- carries the
/// q-number weights f-|t> = [t]_q |t-1>.
struct KFermionPair {
    int k = 0;
    Matrix fm;
    Matrix fp;
    /// [f-, f+] = diag(q^t).
    Matrix Kf;
};

KFermionPair build_kfermion_pair(int k);

/// f- + f+^(k-1) / [k-1]_q!, the cyclic grade-lowering operator.
Matrix cyclic_lowering(const KFermionPair &pair);

enum class BosonVariant {
    /// Per-sector G_s(m+1) - G_s(m) = f_s(m), G_s(0) = 0.
    kSector,
    /// Reuses the graded structure function F_s.
    kSkewed,
};

const char *variant_name(BosonVariant variant);
BosonVariant parse_variant(const std::string &name);

/// X+-, K and N assembled from one k-fermion pair and k deformed-boson pairs
/// on C^k (x) C^d. States are indexed t * d + m (fermion grade t, boson level
/// m), the same layout as GradedBasis(k, d).
struct TensorRealization {
    int k;
    int d;
    BosonVariant variant;
    StructureSpec spec;
    KFermionPair fermions;
    /// (b(s)-, b(s)+) on C^d.
    std::vector<std::pair<Matrix, Matrix>> bosons;
    OperatorMatrix Xm;
    OperatorMatrix Xp;
    OperatorMatrix K;
    OperatorMatrix N;
    std::vector<OperatorMatrix> projectors;

    GradedBasis basis() const { return GradedBasis(k, d); }
};

TensorRealization build_tensor_realization(int k, int d, const StructureSpec &spec, BosonVariant variant);

/// [b(s)-, b(s)+] = f_s(N_b) for every s on boson levels m <= d-1-margin.
ReportFragment verify_boson_pairs(const TensorRealization &t, int margin, const Tolerances &tol = {});

/// Algebra relations of the tensor realization on its safe window, the
/// adjointness of its X+-, and the eigenvalue distance between X+ X- here
/// and in the Fock representation. Every entry is informative: the boson
/// convention behind the tensor construction is not pinned down, so the
/// comparison reports rather than asserts.
ReportFragment compare_realizations(const TensorRealization &t, const AlgebraRep &rep, int margin,
                                    const Tolerances &tol = {});

/// Max distance between the sorted eigenvalue multisets of two square
/// matrices of equal size.
double spectral_distance(const Matrix &a, const Matrix &b);

}  // namespace fsusy
