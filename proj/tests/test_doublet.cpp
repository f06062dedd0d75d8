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
#include <memory>

#include "doctest.h"
#include "fsusy/doublet.hpp"
#include "fsusy/error.hpp"
#include "oracles.hpp"

using namespace fsusy;

namespace {

FsusyDoublet doublet_for(const StructureSpec &spec, int d) {
    return build_doublet(std::make_shared<const AlgebraRep>(build_rep(spec, d)));
}

oracle::StructureFn as_fn(const StructureSpec &spec) {
    return [spec](int s, long n) { return spec.f(s, n); };
}

void check_all_pass(const ReportFragment &entries) {
    for (const auto &e : entries) {
        INFO(e.identity, " residual=", e.residual.value_or(-1.0));
        CHECK(e.pass);
    }
}

}  // namespace

TEST_CASE("supercharges annihilate the designated sectors") {
    const FsusyDoublet db = doublet_for(StructureSpec::uniform(3, 1.0), 10);
    const GradedBasis &b = db.basis();
    for (int n = 0; n < 10; ++n) {
        CHECK(db.Qm.entries.col(b.index(n, 1)).norm() == 0.0);
        CHECK(db.Qp.entries.col(b.index(n, 0)).norm() == 0.0);
    }
    // F_2(2) = 2 at k = 3, f = 1.
    CHECK(oracle::telescoped_F([](int, long) { return 1.0; }, 3, 2, 2) == 2.0);
    CHECK(std::abs(db.Qm.entries(b.index(1, 1), b.index(2, 2)) - std::sqrt(2.0)) < 1e-15);
    CHECK(db.Qm.entries.col(b.index(2, 2)).norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK((db.Qp.entries - db.Qm.entries.adjoint()).norm() == 0.0);
}

TEST_CASE("nilpotency is exact on the full space") {
    for (int k = 2; k <= 7; ++k) {
        CAPTURE(k);
        for (const auto &spec : {StructureSpec::uniform(k, 1.0), StructureSpec::affine(k, 0.5, 1.0)}) {
            const FsusyDoublet db = doublet_for(spec, 12);
            CHECK(power(db.Qm.entries, k).norm() == 0.0);
            CHECK(power(db.Qp.entries, k).norm() == 0.0);
        }
    }
}

TEST_CASE("Hamiltonian examples") {
    SUBCASE("k=3, f = 1 floor state") {
        const FsusyDoublet db = doublet_for(StructureSpec::uniform(3, 1.0), 8);
        const GradedBasis &b = db.basis();
        CHECK(std::abs(db.H.entries(b.index(0, 0), b.index(0, 0)) - cplx(-1.0, 0.0)) < 1e-15);
        for (int n = 0; n < 8; ++n) {
            CHECK(db.partners(3, n) == doctest::Approx(2.0 * n - 1));
            CHECK(db.partners(2, n) == doctest::Approx(2.0 * n + 1));
            CHECK(db.partners(1, n) == doctest::Approx(2.0 * n + 3));
            for (int s = 1; s <= 3; ++s)
                CHECK(oracle::partner([](int, long) { return 1.0; }, 3, s, n) == doctest::Approx(db.partners(s, n)));
        }
    }
    SUBCASE("k=2, f = 0 gives H = 0") {
        const auto spec = StructureSpec::uniform(2, 0.0);
        const StructureFunction F = solve_structure_function(spec, 6);
        const FsusyDoublet db = build_doublet(std::make_shared<const AlgebraRep>(build_rep(spec, GradedBasis(2, 6), F)));
        CHECK(db.H.entries.norm() == 0.0);
        for (int s = 1; s <= 2; ++s)
            for (int n = 0; n < 6; ++n) CHECK(db.partners(s, n) == 0.0);
    }
}

TEST_CASE("operator assembly agrees with the partner formula") {
    for (int k = 2; k <= 6; ++k) {
        std::vector<double> cs;
        for (int s = 0; s < k; ++s) cs.push_back(0.5 + 0.75 * s);
        for (const auto &spec : {StructureSpec::uniform(k, 1.0), StructureSpec::constant(cs), StructureSpec::affine(k, 0.0, 1.0),
                                 StructureSpec::affine(k, 0.5, 1.0), StructureSpec::affine(k, 0.25, 3.0)}) {
            CAPTURE(k);
            const FsusyDoublet db = doublet_for(spec, 14);
            const GradedBasis &b = db.basis();
            for (int i = 0; i < b.dim(); ++i) {
                const int s = b.sector(i);
                const int n = b.level(i);
                const double expected = oracle::partner(as_fn(spec), k, s == 0 ? k : s, n);
                CHECK(std::abs(db.H.entries(i, i).real() - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
                CHECK(db.H.entries(i, i).imag() == 0.0);
            }
            check_all_pass(verify_hamiltonian(db));
        }
    }
}

TEST_CASE("multilinear relation has k ordered terms") {
    const FsusyDoublet db = doublet_for(StructureSpec::uniform(3, 1.0), 6);
    const Matrix &m = db.Qm.entries;
    const Matrix &p = db.Qp.entries;
    const Matrix expected = m * m * p + m * p * m + p * m * m;
    CHECK((multilinear_lhs(m, p, 3) - expected).norm() == 0.0);
    CHECK((multilinear_lhs(m, p, 2) - (m * p + p * m)).norm() == 0.0);
}

TEST_CASE("fractional supersymmetry axioms") {
    SUBCASE("k=3, f = 1, d = 30") {
        const FsusyDoublet db = doublet_for(StructureSpec::uniform(3, 1.0), 30);
        const auto entries = verify_fsusy(db, 3);
        for (const auto &e : entries) CHECK(*e.residual < 1e-10);
        check_all_pass(entries);
    }
    SUBCASE("k=2 reduces to the anticommutator") {
        const FsusyDoublet db = doublet_for(StructureSpec::affine(2, 0.0, 1.0), 40);
        const Matrix anti = anticommutator(db.Qm.entries, db.Qp.entries);
        CHECK(residual(anti, db.H.entries, Window::safe(db.basis(), 2)) < 1e-10);
        check_all_pass(verify_fsusy(db, 2));
    }
    SUBCASE("families across k") {
        for (int k = 2; k <= 6; ++k) {
            CAPTURE(k);
            for (const auto &spec : {StructureSpec::uniform(k, 1.0), StructureSpec::affine(k, 0.5, 1.0), StructureSpec::affine(k, -0.1, 2.0)}) {
                const FsusyDoublet db = doublet_for(spec, 16);
                check_all_pass(verify_fsusy(db, k));
                const Window w = Window::safe(db.basis(), k);
                CHECK(residual(db.H.entries * db.Qm.entries, db.Qm.entries * db.H.entries, w) < 1e-12);
            }
        }
    }
}

TEST_CASE("table specs need values at shifted arguments") {
    const auto spec = StructureSpec::table({{0, {1, 1, 1, 1, 1, 1, 1, 1}}, {0, {1, 1, 1, 1, 1, 1, 1, 1}}, {0, {1, 1, 1, 1, 1, 1, 1, 1}}});
    const StructureFunction F = solve_structure_function(spec, 6);
    try {
        partner_value(spec, F, 3, 0);
        FAIL("expected out-of-domain");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kOutOfDomain);
    }
    const auto extended = StructureSpec::table({{0, {1, 1, 1, 1, 1, 1, 1, 1}}, {0, {1, 1, 1, 1, 1, 1, 1, 1}}, {0, {1, 1, 1, 1, 1, 1, 1, 1}}}, true);
    CHECK(partner_value(extended, solve_structure_function(extended, 6), 3, 0) == doctest::Approx(-1.0));
}
