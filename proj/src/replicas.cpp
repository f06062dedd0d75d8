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

#include "fsusy/replicas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fsusy/error.hpp"

namespace fsusy {

namespace {

cplx partner_root(double value, double slack, RootBranch branch, int s, int n, std::vector<NegativeLevel> &negatives,
                  int sector) {
    if (value >= -slack) return {std::sqrt(std::max(value, 0.0)), 0.0};
    if (branch == RootBranch::kReal)
        throw Error(ErrorKind::kFactorizationInvalid, "H_" + std::to_string(s) + "(" + std::to_string(n) +
                                                          ") = " + std::to_string(value) + " is negative");
    negatives.push_back({n, sector, value});
    return std::sqrt(cplx(value, 0.0));
}

double partner_slack(const PartnerTable &table) {
    double scale = 1.0;
    for (int s = 0; s < table.order(); ++s)
        for (int n = 0; n < table.levels(); ++n) scale = std::max(scale, std::abs(table(s, n)));
    return 1e-12 * scale;
}

std::string suffix(int s) { return " (s=" + std::to_string(s) + ")"; }

}  // namespace

ShiftOperators build_shift_operators(const FsusyDoublet &doublet, int s, RootBranch branch) {
    const int k = doublet.order();
    if (s < 2 || s > k) throw Error(ErrorKind::kOutOfDomain, "replica index must lie in 2..k");
    const GradedBasis &basis = doublet.basis();
    const int d = basis.levels();
    const int upper = wrap_sector(s, k);
    const int lower = wrap_sector(s - 1, k);
    const double slack = partner_slack(doublet.partners);

    Matrix xsm = Matrix::Zero(basis.dim(), basis.dim());
    Matrix xsp = Matrix::Zero(basis.dim(), basis.dim());
    std::vector<NegativeLevel> negatives;
    for (int n = 1; n <= d - 1; ++n) {
        cplx root = partner_root(doublet.partners(s, n), slack, branch, s, n, negatives, upper);
        xsm(basis.index(n - 1, lower), basis.index(n, upper)) = root;
        xsp(basis.index(n, upper), basis.index(n - 1, lower)) = root;
    }
    const std::string tag = std::to_string(s);
    return {{"Xsm_" + tag, xsm}, {"Xsp_" + tag, xsp}, std::move(negatives)};
}

ReplicaDoublet build_replica(const FsusyDoublet &doublet, int s, RootBranch branch) {
    ShiftOperators shift = build_shift_operators(doublet, s, branch);
    const AlgebraRep &rep = *doublet.rep;
    const Matrix &xm = shift.Xsm.entries;
    const Matrix &xp = shift.Xsp.entries;
    const std::string tag = std::to_string(s);

    ReplicaDoublet rd;
    rd.s = s;
    rd.qm = {"qm_" + tag, xm * rep.projector(s)};
    rd.qp = {"qp_" + tag, xp * rep.projector(s - 1)};
    rd.h = {"h_" + tag, xm * xp * rep.projector(s - 1) + xp * xm * rep.projector(s)};
    rd.Xsm = std::move(shift.Xsm);
    rd.Xsp = std::move(shift.Xsp);
    rd.negative_levels = std::move(shift.negative_levels);
    return rd;
}

std::vector<ReplicaDoublet> build_replicas(const FsusyDoublet &doublet, RootBranch branch) {
    std::vector<ReplicaDoublet> out;
    for (int s = 2; s <= doublet.order(); ++s) out.push_back(build_replica(doublet, s, branch));
    return out;
}

Matrix partner_operator(const FsusyDoublet &doublet, int s) {
    return diagonal_operator(doublet.basis(), [&](int n, int) { return doublet.partners(s, n); });
}

ReportFragment verify_replica(const ReplicaDoublet &rd, const FsusyDoublet &doublet, int margin,
                              const Tolerances &tol) {
    const GradedBasis &basis = doublet.basis();
    const int k = doublet.order();
    const int s = rd.s;
    if (rd.h.dim() != basis.dim()) throw Error(ErrorKind::kDimensionMismatch, "replica and doublet dimensions differ");
    const Window window = Window::safe(basis, margin);
    const Window full = Window::full(basis);
    const Window no_ground = window.excluding({basis.index(0, wrap_sector(s, k))}, "excluding |0,s>");
    const AlgebraRep &rep = *doublet.rep;
    const Matrix &xm = rd.Xsm.entries;
    const Matrix &xp = rd.Xsp.entries;
    const Matrix &qm = rd.qm.entries;
    const Matrix &qp = rd.qp.entries;
    const Matrix &h = rd.h.entries;
    const std::string tag = suffix(s);
    ReportFragment out;

    // X(s)- X(s)+ = H_s(N+1) on sector s-1.
    const int d = basis.levels();
    Matrix shifted = diagonal_operator(basis, [&](int n, int) { return n + 1 < d ? doublet.partners(s, n + 1) : 0.0; });
    out.push_back(make_entry("X(s)- X(s)+ = H_s(N+1) on sector s-1" + tag, "replica",
                             residual(xm * xp * rep.projector(s - 1), shifted * rep.projector(s - 1), window),
                             tol.loose(), window.description()));

    const Matrix lower = partner_operator(doublet, s - 1);
    const Matrix upper = partner_operator(doublet, s);
    const Matrix decomposition = lower * rep.projector(s - 1) + upper * rep.projector(s);
    out.push_back(make_entry("h(s) = H_{s-1} Pi_{s-1} + H_s Pi_s" + tag, "replica", residual(h, decomposition, no_ground),
                             tol.strict(), no_ground.description()));
    auto with_ground = make_entry("h(s) = H_{s-1} Pi_{s-1} + H_s Pi_s, ground state kept" + tag, "replica",
                                  residual(h, decomposition, window), tol.strict(), window.description(), true);
    with_ground.note = "H_s(0) = " + std::to_string(doublet.partners(s, 0)) + " is omitted by the factorization";
    out.push_back(std::move(with_ground));

    out.push_back(make_entry("H_{s-1} X(s)- = X(s)- H_s" + tag, "intertwining", residual(lower * xm, xm * upper, window),
                             tol.strict(), window.description()));
    out.push_back(make_entry("H_s X(s)+ = X(s)+ H_{s-1}" + tag, "intertwining", residual(upper * xp, xp * lower, window),
                             tol.strict(), window.description()));

    auto adjoint = make_entry("q(s)+ = q(s)-^dagger" + tag, "replica", residual(qp, qm.adjoint(), window), tol.strict(),
                              window.description());
    if (!rd.negative_levels.empty()) {
        std::string levels;
        for (const auto &lv : rd.negative_levels) {
            if (!levels.empty()) levels += ", ";
            levels += "H_" + std::to_string(s) + "(" + std::to_string(lv.n) + ")=" + std::to_string(lv.value);
        }
        adjoint.note = "negative partner values: " + levels;
    }
    out.push_back(std::move(adjoint));
    out.push_back(make_entry("q(s)-^2 = 0" + tag, "replica", (qm * qm).norm(), Tolerances::exact(), full.description()));
    out.push_back(make_entry("q(s)+^2 = 0" + tag, "replica", (qp * qp).norm(), Tolerances::exact(), full.description()));
    out.push_back(make_entry("h(s) Hermitian" + tag, "replica", residual(h, h.adjoint(), full), tol.strict(),
                             full.description()));
    out.push_back(make_entry("h(s) = {q(s)-, q(s)+}" + tag, "replica", residual(h, anticommutator(qm, qp), window),
                             tol.strict(), window.description()));
    out.push_back(make_entry("[h(s), q(s)-] = 0" + tag, "replica", residual(h * qm, qm * h, window), tol.strict(),
                             window.description()));
    out.push_back(make_entry("[h(s), q(s)+] = 0" + tag, "replica", residual(h * qp, qp * h, window), tol.strict(),
                             window.description()));
    return out;
}

ReportFragment check_isospectrality(const FsusyDoublet &doublet, int margin, const Tolerances &tol) {
    const GradedBasis &basis = doublet.basis();
    const Window window = Window::safe(basis, margin);
    const int k = doublet.order();
    const int top = basis.levels() - 1 - margin;
    const std::string range = "1 <= n <= " + std::to_string(top);
    const PartnerTable &H = doublet.partners;

    auto gap = [&](int lower, int upper) {
        double worst = 0.0;
        for (int n = 1; n <= top; ++n) worst = std::max(worst, std::abs(H(lower, n - 1) - H(upper, n)));
        return worst;
    };

    ReportFragment out;
    for (int s = 2; s <= k; ++s)
        out.push_back(
            make_entry("H_{s-1}(n-1) = H_s(n)" + suffix(s), "isospectrality", gap(s - 1, s), tol.loose(), range));
    auto wrap = make_entry("H_k(n-1) = H_1(n) (wrap pair)", "isospectrality", gap(k, 1), tol.loose(), range, true);
    wrap.note = "not a claimed identity";
    out.push_back(std::move(wrap));
    return out;
}

ReportFragment verify_sum_identity(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas,
                                   int margin, const Tolerances &tol) {
    const GradedBasis &basis = doublet.basis();
    const int k = doublet.order();
    std::map<int, const ReplicaDoublet *> by_index;
    for (const auto &rd : replicas) by_index[rd.s] = &rd;
    for (int s = 2; s <= k; ++s)
        if (!by_index.count(s)) throw Error(ErrorKind::kMissingReplica, "replica s=" + std::to_string(s) + " missing");

    const Window window = Window::safe(basis, margin);
    std::vector<int> grounds;
    for (int s = 2; s <= k; ++s) grounds.push_back(basis.index(0, wrap_sector(s, k)));
    const Window no_ground = window.excluding(grounds, "excluding |0,s> for s=2..k");

    const ReplicaDoublet &second = *by_index.at(2);
    Matrix rhs = second.qm.entries * second.qp.entries;
    for (int s = 2; s <= k; ++s) rhs += by_index.at(s)->qp.entries * by_index.at(s)->qm.entries;
    const Matrix &h = doublet.H.entries;

    ReportFragment out;
    out.push_back(make_entry("H = q(2)- q(2)+ + sum_s q(s)+ q(s)-", "sum-identity", residual(h, rhs, no_ground),
                             tol.loose(), no_ground.description()));
    out.push_back(make_entry("H = q(2)- q(2)+ + sum_s q(s)+ q(s)-, ground states kept", "sum-identity",
                             residual(h, rhs, window), tol.loose(), window.description(), true));
    if (k == 2)
        out.push_back(make_entry("h(2) = H (k = 2)", "sum-identity", residual(second.h.entries, h, window), tol.strict(),
                                 window.description()));
    return out;
}

}  // namespace fsusy
