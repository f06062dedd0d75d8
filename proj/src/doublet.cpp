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

#include "fsusy/doublet.hpp"

#include <algorithm>
#include <cmath>

#include "fsusy/error.hpp"

namespace fsusy {

namespace {

// f_t(n + shift) on every basis state, as a diagonal.
Eigen::VectorXcd shifted_f(const AlgebraRep &rep, int t, int shift) {
    Eigen::VectorXcd v(rep.basis.dim());
    for (int i = 0; i < rep.basis.dim(); ++i) v(i) = rep.spec.f(t, rep.basis.level(i) + shift);
    return v;
}

}  // namespace

std::pair<OperatorMatrix, OperatorMatrix> build_supercharges(const AlgebraRep &rep) {
    const Eigen::Index dim = rep.basis.dim();
    const Matrix identity = Matrix::Identity(dim, dim);
    OperatorMatrix qm{"Qm", rep.Xm.entries * (identity - rep.projector(1))};
    OperatorMatrix qp{"Qp", rep.Xp.entries * (identity - rep.projector(0))};
    return {std::move(qm), std::move(qp)};
}

OperatorMatrix build_hamiltonian_operator(const AlgebraRep &rep) {
    const int k = rep.order();
    Matrix h = static_cast<double>(k - 1) * (rep.Xp.entries * rep.Xm.entries);
    for (int s = 3; s <= k; ++s)
        for (int t = 2; t <= s - 1; ++t)
            h -= static_cast<double>(t - 1) * (shifted_f(rep, t, t - s).asDiagonal() * rep.projector(s));
    for (int s = 1; s <= k - 1; ++s)
        for (int t = s; t <= k - 1; ++t)
            h -= static_cast<double>(t - k) * (shifted_f(rep, t, t - s).asDiagonal() * rep.projector(s));
    return {"H", h};
}

double partner_value(const StructureSpec &spec, const StructureFunction &F, int s, int n) {
    const int k = spec.order();
    if (s < 1 || s > k) throw Error(ErrorKind::kOutOfDomain, "partner index must lie in 1..k");
    double value = static_cast<double>(k - 1) * F(s, n);
    for (int t = 2; t <= k - 1; ++t) value -= static_cast<double>(t - 1) * spec.f(t, n - s + t);
    double tail = 0.0;
    for (int t = s; t <= k - 1; ++t) tail += spec.f(t, n - s + t);
    return value + static_cast<double>(k - 1) * tail;
}

PartnerTable partner_table(const StructureSpec &spec, const StructureFunction &F, int d) {
    const int k = spec.order();
    std::vector<std::vector<double>> values(k, std::vector<double>(static_cast<std::size_t>(d)));
    for (int s = 1; s <= k; ++s)
        for (int n = 0; n < d; ++n) values[wrap_sector(s, k)][n] = partner_value(spec, F, s, n);
    return PartnerTable(k, std::move(values));
}

FsusyDoublet build_doublet(std::shared_ptr<const AlgebraRep> rep) {
    auto [qm, qp] = build_supercharges(*rep);
    OperatorMatrix h = build_hamiltonian_operator(*rep);
    PartnerTable partners = partner_table(rep->spec, rep->F, rep->levels());
    return FsusyDoublet{std::move(rep), std::move(qm), std::move(qp), std::move(h), std::move(partners)};
}

Matrix multilinear_lhs(const Matrix &Qm, const Matrix &Qp, int k) {
    Matrix sum = Matrix::Zero(Qm.rows(), Qm.cols());
    for (int j = 0; j <= k - 1; ++j) sum += power(Qm, k - 1 - j) * Qp * power(Qm, j);
    return sum;
}

ReportFragment verify_fsusy(const FsusyDoublet &doublet, int margin, const Tolerances &tol) {
    const int k = doublet.order();
    const Window window = Window::safe(doublet.basis(), margin);
    const Window full = Window::full(doublet.basis());
    const Matrix &qm = doublet.Qm.entries;
    const Matrix &qp = doublet.Qp.entries;
    const Matrix &h = doublet.H.entries;
    const std::string rel = "fsusy-axioms";
    ReportFragment out;

    out.push_back(make_entry("Q+ = Q-^dagger", rel, residual(qp, qm.adjoint(), full), tol.strict(), full.description()));
    out.push_back(make_entry("Q-^k = 0", rel, power(qm, k).norm(), Tolerances::exact(), full.description()));
    out.push_back(make_entry("Q+^k = 0", rel, power(qp, k).norm(), Tolerances::exact(), full.description()));
    out.push_back(make_entry("sum_j Q-^(k-1-j) Q+ Q-^j = Q-^(k-2) H", rel,
                             residual(multilinear_lhs(qm, qp, k), power(qm, k - 2) * h, window), tol.loose(),
                             window.description()));
    out.push_back(
        make_entry("[H,Q-] = 0", rel, residual(h * qm, qm * h, window), tol.strict(), window.description()));
    out.push_back(
        make_entry("[H,Q+] = 0", rel, residual(h * qp, qp * h, window), tol.strict(), window.description()));
    return out;
}

ReportFragment verify_hamiltonian(const FsusyDoublet &doublet, const Tolerances &tol) {
    const GradedBasis &basis = doublet.basis();
    const Window full = Window::full(basis);
    const Matrix &h = doublet.H.entries;
    const std::string rel = "hamiltonian";
    ReportFragment out;

    out.push_back(make_entry("H Hermitian", rel, residual(h, h.adjoint(), full), tol.strict(), full.description()));

    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    double offdiag = 0.0;
    double partner_gap = 0.0;
    for (int j = 0; j < basis.dim(); ++j) {
        for (int i = 0; i < basis.dim(); ++i)
            if (i != j) offdiag = std::max(offdiag, std::abs(h(i, j)));
        const int n = basis.level(j);
        const int s = basis.sector(j);
        partner_gap = std::max(partner_gap, std::abs(h(j, j) - cplx(doublet.partners(s == 0 ? basis.order() : s, n), 0.0)));
    }
    out.push_back(make_entry("H diagonal", rel, offdiag / scale, tol.offdiag(), full.description()));
    out.push_back(make_entry("H = sum_s H_s(N) Pi_s (operator vs partner formula)", rel, partner_gap / scale,
                             tol.strict(), full.description()));

    double graded = 0.0;
    for (const auto &pi : doublet.rep->projectors) graded = std::max(graded, commutator(h, pi.entries).norm());
    out.push_back(make_entry("[H,Pi_s] = 0", rel, graded, Tolerances::exact(), full.description()));
    return out;
}

}  // namespace fsusy
