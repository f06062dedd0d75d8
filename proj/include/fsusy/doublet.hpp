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
#include <utility>
#include <vector>

#include "fsusy/wkalg.hpp"

namespace fsusy {

/// Partner Hamiltonian values H_s(n) for s = 1..k (s = k stored as sector 0)
/// and 0 <= n < d.
class PartnerTable {
   public:
    PartnerTable(int k, std::vector<std::vector<double>> values) : k_(k), values_(std::move(values)) {}

    int order() const { return k_; }
    int levels() const { return static_cast<int>(values_.front().size()); }
    double operator()(long long s, int n) const { return values_[wrap_sector(s, k_)][n]; }

   private:
    int k_;
    std::vector<std::vector<double>> values_;
};

/// The fractional supersymmetric doublet (H, Q) of order k built on a
/// representation of the algebra.
struct FsusyDoublet {
    std::shared_ptr<const AlgebraRep> rep;
    OperatorMatrix Qm;
    OperatorMatrix Qp;
    OperatorMatrix H;
    PartnerTable partners;

    int order() const { return rep->order(); }
    const GradedBasis &basis() const { return rep->basis; }
};

/// Q- = X- (1 - Pi_1), Q+ = X+ (1 - Pi_0).
std::pair<OperatorMatrix, OperatorMatrix> build_supercharges(const AlgebraRep &rep);

/// Literal operator assembly
///   H = (k-1) X+ X- - sum_{s=3..k} sum_{t=2..s-1} (t-1) f_t(N-s+t) Pi_s
///                   - sum_{s=1..k-1} sum_{t=s..k-1} (t-k) f_t(N-s+t) Pi_s
/// with Pi_k = Pi_0. Empty ranges contribute nothing.
OperatorMatrix build_hamiltonian_operator(const AlgebraRep &rep);

/// Scalar partner value
///   H_s(n) = (k-1) F_s(n) - sum_{t=2..k-1} (t-1) f_t(n-s+t) + (k-1) sum_{t=s..k-1} f_t(n-s+t)
/// for 1 <= s <= k, where the unsubscripted structure function is read as
/// the sector function F_s (F_k = F_0).
double partner_value(const StructureSpec &spec, const StructureFunction &F, int s, int n);

PartnerTable partner_table(const StructureSpec &spec, const StructureFunction &F, int d);

FsusyDoublet build_doublet(std::shared_ptr<const AlgebraRep> rep);

/// Nilpotency Q+-^k = 0 (full space, exact), the k-term multilinear relation
/// sum_j Q-^(k-1-j) Q+ Q-^j = Q-^(k-2) H and [H, Q+-] = 0 on the safe window.
ReportFragment verify_fsusy(const FsusyDoublet &doublet, int margin, const Tolerances &tol = {});

/// H Hermitian and diagonal, its diagonal equal to the partner table
/// entry by entry, and [H, Pi_s] = 0.
ReportFragment verify_hamiltonian(const FsusyDoublet &doublet, const Tolerances &tol = {});

/// Left side of the multilinear relation, ordered
/// Q-^(k-1) Q+ + Q-^(k-2) Q+ Q- + ... + Q+ Q-^(k-1).
Matrix multilinear_lhs(const Matrix &Qm, const Matrix &Qp, int k);

}  // namespace fsusy
