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

#include "fsusy/realization.hpp"

#include <algorithm>
#include <cmath>

#include "fsusy/error.hpp"
#include "fsusy/qarith.hpp"

namespace fsusy {

namespace {

Matrix kron(const Matrix &outer, const Matrix &inner) {
    Matrix out(outer.rows() * inner.rows(), outer.cols() * inner.cols());
    for (Eigen::Index i = 0; i < outer.rows(); ++i)
        for (Eigen::Index j = 0; j < outer.cols(); ++j)
            out.block(i * inner.rows(), j * inner.cols(), inner.rows(), inner.cols()) = outer(i, j) * inner;
    return out;
}

std::vector<std::vector<double>> boson_structure(int k, int d, const StructureSpec &spec, BosonVariant variant) {
    std::vector<std::vector<double>> G(k, std::vector<double>(static_cast<std::size_t>(d), 0.0));
    if (variant == BosonVariant::kSector) {
        for (int s = 0; s < k; ++s)
            for (int m = 1; m < d; ++m) G[s][m] = G[s][m - 1] + spec.f(s, m - 1);
    } else {
        StructureFunction F = solve_structure_function(spec, std::max(d, 2));
        for (int s = 0; s < k; ++s)
            for (int m = 0; m < d; ++m) G[s][m] = F(s, m);
    }
    return G;
}

}  // namespace

const char *variant_name(BosonVariant variant) { return variant == BosonVariant::kSector ? "sector" : "skewed"; }

BosonVariant parse_variant(const std::string &name) {
    if (name == "sector") return BosonVariant::kSector;
    if (name == "skewed") return BosonVariant::kSkewed;
    throw Error(ErrorKind::kInvalidVariant, "unknown boson variant '" + name + "'");
}

KFermionPair build_kfermion_pair(int k) {
    const RootOfUnity q(k);
    KFermionPair pair;
    pair.k = k;
    pair.fm = Matrix::Zero(k, k);
    pair.fp = Matrix::Zero(k, k);
    for (int t = 0; t + 1 < k; ++t) {
        pair.fp(t + 1, t) = 1.0;
        pair.fm(t, t + 1) = q_number(t + 1, q.value());
    }
    pair.Kf = pair.fm * pair.fp - pair.fp * pair.fm;
    return pair;
}

Matrix cyclic_lowering(const KFermionPair &pair) {
    const cplx q = primitive_root(pair.k);
    return pair.fm + power(pair.fp, pair.k - 1) / q_factorial(pair.k - 1, q);
}

TensorRealization build_tensor_realization(int k, int d, const StructureSpec &spec, BosonVariant variant) {
    if (spec.order() != k) throw Error(ErrorKind::kDimensionMismatch, "spec order differs from k");
    if (d < 2) throw Error(ErrorKind::kDegenerateSpace, "tensor realization needs d >= 2");

    KFermionPair fermions = build_kfermion_pair(k);
    const auto G = boson_structure(k, d, spec, variant);
    std::vector<std::pair<Matrix, Matrix>> bosons;
    for (int s = 0; s < k; ++s) {
        Matrix bm = Matrix::Zero(d, d);
        for (int m = 1; m < d; ++m) {
            if (G[s][m] < -1e-12 * std::max(1.0, std::abs(G[s][m])))
                throw Error(ErrorKind::kRepresentationInvalid,
                            "boson structure G_" + std::to_string(s) + "(" + std::to_string(m) + ") is negative");
            bm(m - 1, m) = std::sqrt(std::max(G[s][m], 0.0));
        }
        bosons.emplace_back(bm, bm.adjoint());
    }

    const Matrix one_b = Matrix::Identity(d, d);
    const Matrix one_f = Matrix::Identity(k, k);
    OperatorMatrix grading{"T_K", kron(fermions.Kf, one_b)};
    Matrix nb = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) nb(m, m) = static_cast<double>(m);
    OperatorMatrix number{"T_N", kron(one_f, nb)};
    std::vector<OperatorMatrix> projectors = build_projectors(grading, k);
    for (auto &p : projectors) p.label = "T_" + p.label;

    const Matrix lowering = kron(cyclic_lowering(fermions), one_b);
    Matrix graded_bm = Matrix::Zero(k * d, k * d);
    Matrix graded_bp = Matrix::Zero(k * d, k * d);
    for (int s = 0; s < k; ++s) {
        graded_bm += kron(one_f, bosons[s].first) * projectors[s].entries;
        graded_bp += kron(one_f, bosons[s].second) * projectors[s].entries;
    }
    OperatorMatrix xm{"T_Xm", lowering * graded_bm};
    OperatorMatrix xp{"T_Xp", power(lowering, k - 1) * graded_bp};
    return TensorRealization{k,          d,           variant,          spec,
                             std::move(fermions), std::move(bosons), std::move(xm), std::move(xp),
                             std::move(grading),  std::move(number), std::move(projectors)};
}

ReportFragment verify_boson_pairs(const TensorRealization &t, int margin, const Tolerances &tol) {
    const Window window = Window::levels(t.d, margin);
    double worst = 0.0;
    for (int s = 0; s < t.k; ++s) {
        const auto &[bm, bp] = t.bosons[s];
        Matrix f = Matrix::Zero(t.d, t.d);
        for (int m = 0; m < t.d; ++m) f(m, m) = t.spec.f(s, m);
        worst = std::max(worst, residual(commutator(bm, bp), f, window));
    }
    return {make_entry(std::string("[b(s)-, b(s)+] = f_s(N_b) (") + variant_name(t.variant) + ")", "realization", worst,
                       tol.loose(), "boson " + window.description(), t.variant != BosonVariant::kSector)};
}

double spectral_distance(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != a.rows() || b.cols() != b.rows())
        throw Error(ErrorKind::kDimensionMismatch, "spectral distance needs square matrices of equal size");
    auto sorted = [](const Matrix &m) {
        Eigen::ComplexEigenSolver<Matrix> solver(m, false);
        std::vector<cplx> ev(solver.eigenvalues().begin(), solver.eigenvalues().end());
        std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
            return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
        });
        return ev;
    };
    const auto ea = sorted(a);
    const auto eb = sorted(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

ReportFragment compare_realizations(const TensorRealization &t, const AlgebraRep &rep, int margin,
                                    const Tolerances &tol) {
    if (t.k != rep.order() || t.d != rep.levels())
        throw Error(ErrorKind::kDimensionMismatch, "tensor realization and representation differ in k or d");
    const GradedBasis basis = t.basis();
    const Window window = Window::safe(basis, margin);
    const std::string prefix = std::string("tensor/") + variant_name(t.variant) + ": ";

    ReportFragment out = algebra_relation_entries(t.Xm.entries, t.Xp.entries, t.N.entries, t.K.entries, t.projectors,
                                                  t.spec, basis, window, tol, prefix, true);
    for (auto &e : out) e.relation = "realization";
    out.push_back(make_entry(prefix + "X+ = X-^dagger", "realization",
                             residual(t.Xp.entries, t.Xm.entries.adjoint(), window), tol.loose(), window.description(),
                             true));
    out.push_back(make_entry(prefix + "spec(X+ X-) vs Fock spec(X+ X-)", "realization",
                             spectral_distance(t.Xp.entries * t.Xm.entries, rep.Xp.entries * rep.Xm.entries),
                             tol.loose(), "full space", true));
    return out;
}

}  // namespace fsusy
