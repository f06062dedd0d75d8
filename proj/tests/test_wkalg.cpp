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

#include <cmath>

#include "doctest.h"
#include "fsusy/error.hpp"
#include "fsusy/wkalg.hpp"
#include "oracles.hpp"

using namespace fsusy;

namespace {

void check_all_pass(const ReportFragment &entries) {
    for (const auto &e : entries) {
        INFO(e.identity, " residual=", e.residual.value_or(-1.0));
        CHECK(e.pass);
    }
}

}  // namespace

TEST_CASE("projectors for k = 2 are the parity projectors") {
    const AlgebraRep rep = build_rep(StructureSpec::uniform(2, 1.0), 6);
    const Matrix identity = Matrix::Identity(12, 12);
    CHECK((rep.projectors[0].entries - (identity + rep.K.entries) / 2.0).norm() < 1e-15);
    CHECK((rep.projectors[1].entries - (identity - rep.K.entries) / 2.0).norm() < 1e-15);
    CHECK(rep.projector(2) == rep.projector(0));
}

TEST_CASE("projectors resolve the identity and select one sector") {
    for (int k = 2; k <= 8; ++k) {
        const AlgebraRep rep = build_rep(StructureSpec::uniform(k, 1.0), 5);
        Matrix sum = Matrix::Zero(rep.basis.dim(), rep.basis.dim());
        for (const auto &p : rep.projectors) sum += p.entries;
        CHECK((sum - Matrix::Identity(rep.basis.dim(), rep.basis.dim())).norm() < 1e-12);
        for (int s = 0; s < k; ++s)
            for (int i = 0; i < rep.basis.dim(); ++i)
                CHECK(rep.projectors[s].entries(i, i) == cplx(rep.basis.sector(i) == s ? 1.0 : 0.0, 0.0));
    }
    const AlgebraRep rep3 = build_rep(StructureSpec::uniform(3, 1.0), 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(rep3.projector(1)(rep3.basis.index(n, 1), rep3.basis.index(n, 1)) == cplx(1.0, 0.0));
        CHECK(rep3.projector(1)(rep3.basis.index(n, 0), rep3.basis.index(n, 0)) == cplx(0.0, 0.0));
        CHECK(rep3.projector(1)(rep3.basis.index(n, 2), rep3.basis.index(n, 2)) == cplx(0.0, 0.0));
    }
}

TEST_CASE("build_projectors rejects a non-cyclic or non-unitary grading") {
    OperatorMatrix bad{"K", Matrix::Identity(4, 4) * 2.0};
    CHECK_THROWS_AS(build_projectors(bad, 2), Error);
    OperatorMatrix not_cyclic{"K", Matrix::Identity(3, 3) * primitive_root(3)};
    try {
        build_projectors(not_cyclic, 2);
        FAIL("expected invalid grading");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kInvalidGrading);
    }
}

TEST_CASE("representation matrix elements") {
    const AlgebraRep rep = build_rep(StructureSpec::uniform(3, 1.0), 8);
    const GradedBasis &b = rep.basis;
    for (int s = 0; s < 3; ++s) CHECK(rep.Xm.entries.col(b.index(0, s)).norm() == 0.0);

    // X-|2,1> = sqrt(F_1(2)) |1,0> with F_1(2) from the telescoped oracle.
    const double F12 = oracle::telescoped_F([](int, long) { return 1.0; }, 3, 1, 2);
    CHECK(F12 == 2.0);
    CHECK(rep.Xm.entries(b.index(1, 0), b.index(2, 1)) == cplx(std::sqrt(F12), 0.0));
    CHECK(rep.Xm.entries.col(b.index(2, 1)).norm() == doctest::Approx(std::sqrt(2.0)));

    const cplx q = primitive_root(3);
    for (int n = 0; n < 8; ++n) CHECK(std::abs(rep.K.entries(b.index(n, 2), b.index(n, 2)) - q * q) < 1e-15);

    // Top level raises to nothing.
    for (int s = 0; s < 3; ++s) CHECK(rep.Xp.entries.col(b.index(7, s)).norm() == 0.0);
}

TEST_CASE("X+ X- is diagonal with entries F_s(n) up to the square-root rounding") {
    const auto spec = StructureSpec::table({{0, {1, 2, 3, 4, 5, 6}}, {0, {0.5, 1, 1, 2, 0.25, 3}}, {0, {2, 2, 2, 2, 2, 2}}});
    StructureFunction F = solve_structure_function(spec, 6);
    const AlgebraRep rep = build_rep(spec, GradedBasis(3, 6), F);
    const Matrix xpxm = rep.Xp.entries * rep.Xm.entries;
    for (int i = 0; i < rep.basis.dim(); ++i)
        for (int j = 0; j < rep.basis.dim(); ++j) {
            if (i == j)
                CHECK(std::abs(xpxm(i, i) - F(rep.basis.sector(i), rep.basis.level(i))) <=
                      4e-16 * std::max(1.0, std::abs(F(rep.basis.sector(i), rep.basis.level(i)))));
            else
                CHECK(xpxm(i, j) == cplx(0.0, 0.0));
        }
    CHECK(commutator(rep.N.entries, rep.K.entries).norm() == 0.0);
}

TEST_CASE("negative structure values are rejected") {
    const auto spec = StructureSpec::uniform(2, -1.0);
    StructureFunction F = solve_structure_function(spec, 4);
    try {
        build_rep(spec, GradedBasis(2, 4), F);
        FAIL("expected representation-invalid");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kRepresentationInvalid);
    }
}

TEST_CASE("algebra relations hold on the safe window") {
    SUBCASE("k=3, f = 1, d = 30, margin 3") {
        const AlgebraRep rep = build_rep(StructureSpec::uniform(3, 1.0), 30);
        auto entries = verify_wk_relations(rep, 3);
        CHECK(entries.size() == 5);
        for (const auto &e : entries) CHECK(*e.residual < 1e-10);
        check_all_pass(verify_rep_structure(rep));
    }
    SUBCASE("every family for k = 2..8") {
        for (int k = 2; k <= 8; ++k) {
            for (const auto &spec : {StructureSpec::uniform(k, 1.0), StructureSpec::affine(k, 0.5, 1.0),
                                     StructureSpec::affine(k, -0.1, 2.0), StructureSpec::affine(k, 0.0, 1.0)}) {
                const AlgebraRep rep = build_rep(spec, 14);
                check_all_pass(verify_wk_relations(rep, k < 12 ? std::min(k, rep.levels() - 2) : 1));
                auto kk = verify_wk_relations(rep, 2).back();
                CHECK(kk.identity == "K^k = 1");
                CHECK(*kk.residual < 1e-12);
            }
            std::vector<double> cs;
            for (int s = 0; s < k; ++s) cs.push_back(0.25 + s);
            check_all_pass(verify_wk_relations(build_rep(StructureSpec::constant(cs), 12), 2));
        }
    }
    SUBCASE("window too small") {
        const AlgebraRep rep = build_rep(StructureSpec::uniform(3, 1.0), 3);
        try {
            verify_wk_relations(rep, 3);
            FAIL("expected window-too-small");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::kWindowTooSmall);
        }
    }
}

TEST_CASE("the truncation ceiling is what the window excludes") {
    const AlgebraRep rep = build_rep(StructureSpec::uniform(2, 1.0), 10);
    // On the full space the commutator fails at the top level.
    const Window full = Window::full(rep.basis);
    Matrix graded = Matrix::Zero(20, 20);
    for (int s = 0; s < 2; ++s) graded += rep.projectors[s].entries;
    CHECK(residual(commutator(rep.Xm.entries, rep.Xp.entries), graded, full) > 0.1);
    CHECK(residual(commutator(rep.Xm.entries, rep.Xp.entries), graded, Window::safe(rep.basis, 1)) < 1e-14);
}
