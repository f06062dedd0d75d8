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

#include "fsusy/wkalg.hpp"

#include <cmath>
#include <string>

#include "fsusy/error.hpp"
#include "fsusy/qarith.hpp"

namespace fsusy {

namespace {

constexpr double kSnap = 1e-12;

bool is_diagonal(const Matrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && m(i, j) != cplx(0.0, 0.0)) return false;
    return true;
}

}  // namespace

std::vector<OperatorMatrix> build_projectors(const OperatorMatrix &K, int k) {
    const RootOfUnity q(k);
    const Eigen::Index dim = K.entries.rows();
    const Matrix identity = Matrix::Identity(dim, dim);
    if ((K.entries * K.entries.adjoint() - identity).norm() > 1e-10 * std::max<double>(1.0, std::sqrt(dim)))
        throw Error(ErrorKind::kInvalidGrading, "grading operator is not unitary");

    // K^0 .. K^(k-1); diagonal K is powered entrywise.
    std::vector<Matrix> powers;
    powers.reserve(static_cast<std::size_t>(k) + 1);
    const bool diagonal = is_diagonal(K.entries);
    powers.push_back(identity);
    for (int t = 1; t <= k; ++t) {
        if (diagonal) {
            Matrix next = Matrix::Zero(dim, dim);
            for (Eigen::Index i = 0; i < dim; ++i) next(i, i) = powers.back()(i, i) * K.entries(i, i);
            powers.push_back(std::move(next));
        } else {
            powers.push_back(powers.back() * K.entries);
        }
    }
    if ((powers[k] - identity).norm() > 1e-10 * std::max<double>(1.0, std::sqrt(dim)))
        throw Error(ErrorKind::kInvalidGrading, "grading operator does not satisfy K^k = 1");

    std::vector<OperatorMatrix> out;
    for (int s = 0; s < k; ++s) {
        Matrix pi = Matrix::Zero(dim, dim);
        for (int t = 0; t < k; ++t) pi += q.pow(-static_cast<long long>(s) * t) * powers[t];
        pi /= static_cast<double>(k);
        // The character sums are 0 or 1 only up to rounding; snap them so
        // that products of projected operators vanish exactly.
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (std::abs(pi(i, j)) < kSnap) pi(i, j) = 0.0;
                else if (std::abs(pi(i, j) - 1.0) < kSnap) pi(i, j) = 1.0;
            }
        out.push_back({"Pi_" + std::to_string(s), pi});
    }
    return out;
}

AlgebraRep build_rep(const StructureSpec &spec, const GradedBasis &basis, const StructureFunction &F) {
    const int k = basis.order();
    const int d = basis.levels();
    if (spec.order() != k || F.order() != k)
        throw Error(ErrorKind::kDimensionMismatch, "spec, basis and structure function disagree on k");
    if (F.top() < d - 1) throw Error(ErrorKind::kDimensionMismatch, "structure function too short for basis");

    const double slack = admissible_negative_slack(F);
    const RootOfUnity q(k);
    const int dim = basis.dim();
    Matrix xm = Matrix::Zero(dim, dim);
    Matrix n_op = Matrix::Zero(dim, dim);
    Matrix k_op = Matrix::Zero(dim, dim);
    for (int s = 0; s < k; ++s) {
        for (int n = 0; n < d; ++n) {
            const int i = basis.index(n, s);
            n_op(i, i) = static_cast<double>(n);
            k_op(i, i) = q.pow(s);
            if (n == 0) continue;
            double value = F(s, n);
            if (value < -slack)
                throw Error(ErrorKind::kRepresentationInvalid, "F_" + std::to_string(s) + "(" + std::to_string(n) +
                                                                   ") = " + std::to_string(value) + " is negative");
            xm(basis.index(n - 1, wrap_sector(s - 1, k)), i) = std::sqrt(std::max(value, 0.0));
        }
    }

    AlgebraRep rep{spec, basis, F, {"Xm", xm}, {"Xp", xm.adjoint()}, {"N", n_op}, {"K", k_op}, {}};
    rep.projectors = build_projectors(rep.K, k);
    return rep;
}

AlgebraRep build_rep(const StructureSpec &spec, int requested_d) {
    StructureFunction F = solve_structure_function(spec, requested_d);
    const int d = effective_dimension(F, requested_d);
    return build_rep(spec, GradedBasis(spec.order(), d), F.truncated(d));
}

ReportFragment algebra_relation_entries(const Matrix &Xm, const Matrix &Xp, const Matrix &N, const Matrix &K,
                                        const std::vector<OperatorMatrix> &projectors, const StructureSpec &spec,
                                        const GradedBasis &basis, const Window &window, const Tolerances &tol,
                                        const std::string &prefix, bool informative) {
    const int k = basis.order();
    const RootOfUnity q(k);
    const std::string rel = "wk-algebra";
    ReportFragment out;

    Matrix graded_f = Matrix::Zero(basis.dim(), basis.dim());
    for (int s = 0; s < k; ++s) {
        Eigen::VectorXcd fs(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) fs(i) = spec.f(s, basis.level(i));
        graded_f += fs.asDiagonal() * projectors[s].entries;
    }
    out.push_back(make_entry(prefix + "[X-,X+] = sum_s f_s(N) Pi_s", rel,
                             residual(commutator(Xm, Xp), graded_f, window), tol.loose(), window.description(),
                             informative));

    double ladder = std::max(residual(commutator(N, Xp), Xp, window), residual(commutator(N, Xm), -Xm, window));
    out.push_back(make_entry(prefix + "[N,X+-] = +-X+-", rel, ladder, tol.loose(), window.description(), informative));

    double deformed = std::max(residual(K * Xp, q.pow(1) * Xp * K, window), residual(K * Xm, q.pow(-1) * Xm * K, window));
    out.push_back(make_entry(prefix + "K X+- = q^(+-1) X+- K", rel, deformed, tol.loose(), window.description(),
                             informative));

    out.push_back(
        make_entry(prefix + "[K,N] = 0", rel, residual(K * N, N * K, window), tol.loose(), window.description(), informative));

    const Matrix identity = Matrix::Identity(basis.dim(), basis.dim());
    out.push_back(make_entry(prefix + "K^k = 1", rel, residual(power(K, k), identity, window), tol.strict(),
                             window.description(), informative));
    return out;
}

ReportFragment verify_wk_relations(const AlgebraRep &rep, int margin, const Tolerances &tol) {
    const Window window = Window::safe(rep.basis, margin);
    return algebra_relation_entries(rep.Xm.entries, rep.Xp.entries, rep.N.entries, rep.K.entries, rep.projectors,
                                    rep.spec, rep.basis, window, tol, "", false);
}

ReportFragment verify_rep_structure(const AlgebraRep &rep, const Tolerances &tol) {
    const Window full = Window::full(rep.basis);
    const std::string rel = "representation";
    const int dim = rep.basis.dim();
    const Matrix identity = Matrix::Identity(dim, dim);
    ReportFragment out;

    out.push_back(make_entry("X+ = X-^dagger", rel, residual(rep.Xp.entries, rep.Xm.entries.adjoint(), full),
                             tol.strict(), full.description()));
    out.push_back(make_entry("N Hermitian", rel, residual(rep.N.entries, rep.N.entries.adjoint(), full), tol.strict(),
                             full.description()));
    out.push_back(make_entry("K unitary", rel, residual(rep.K.entries * rep.K.entries.adjoint(), identity, full),
                             tol.strict(), full.description()));

    double herm = 0.0, idem = 0.0, ortho = 0.0;
    Matrix sum = Matrix::Zero(dim, dim);
    for (int s = 0; s < rep.order(); ++s) {
        const Matrix &ps = rep.projectors[s].entries;
        sum += ps;
        herm = std::max(herm, residual(ps, ps.adjoint(), full));
        idem = std::max(idem, residual(ps * ps, ps, full));
        for (int t = 0; t < rep.order(); ++t)
            if (t != s) ortho = std::max(ortho, (ps * rep.projectors[t].entries).norm());
    }
    out.push_back(make_entry("Pi_s Hermitian", rel, herm, tol.strict(), full.description()));
    out.push_back(make_entry("Pi_s Pi_s = Pi_s", rel, idem, tol.strict(), full.description()));
    out.push_back(make_entry("Pi_s Pi_t = 0 (s != t)", rel, ortho, tol.strict(), full.description()));
    out.push_back(make_entry("sum_s Pi_s = 1", rel, residual(sum, identity, full), tol.strict(), full.description()));
    return out;
}

}  // namespace fsusy
