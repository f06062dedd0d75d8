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
#include <random>

#include "doctest.h"
#include "fsusy/error.hpp"
#include "fsusy/fock.hpp"
#include "oracles.hpp"

using namespace fsusy;

namespace {

oracle::StructureFn as_fn(const StructureSpec &spec) {
    return [spec](int s, long n) { return spec.f(s, n); };
}

StructureSpec random_table(std::mt19937 &rng, int k, int d) {
    std::uniform_real_distribution<double> value(-2.0, 5.0);
    std::vector<TableSector> sectors(k);
    for (auto &t : sectors) {
        t.first_n = 0;
        for (int n = 0; n < d; ++n) t.values.push_back(value(rng));
    }
    return StructureSpec::table(sectors);
}

// Multiples of 1/8 in [-2, 5]: every partial sum is exactly representable.
StructureSpec dyadic_table(std::mt19937 &rng, int k, int d) {
    std::uniform_int_distribution<int> eighths(-16, 40);
    std::vector<TableSector> sectors(k);
    for (auto &t : sectors)
        for (int n = 0; n < d; ++n) t.values.push_back(eighths(rng) / 8.0);
    return StructureSpec::table(sectors);
}

}  // namespace

TEST_CASE("graded basis ordering is a bijection") {
    GradedBasis basis(4, 7);
    CHECK(basis.dim() == 28);
    for (int i = 0; i < basis.dim(); ++i) CHECK(basis.index(basis.level(i), basis.sector(i)) == i);
    for (int s = 0; s < 4; ++s)
        for (int n = 0; n < 7; ++n) {
            CHECK(basis.level(basis.index(n, s)) == n);
            CHECK(basis.sector(basis.index(n, s)) == s);
        }
}

TEST_CASE("structure function examples") {
    SUBCASE("k=3, f = 1 gives F_s(n) = n") {
        auto F = solve_structure_function(StructureSpec::uniform(3, 1.0), 12);
        for (int s = 0; s < 3; ++s)
            for (int n = 0; n <= 12; ++n) CHECK(F(s, n) == static_cast<double>(n));
    }
    SUBCASE("f = 0 gives F = 0") {
        auto F = solve_structure_function(StructureSpec::uniform(5, 0.0), 9);
        for (int s = 0; s < 5; ++s)
            for (int n = 0; n <= 9; ++n) CHECK(F(s, n) == 0.0);
    }
    SUBCASE("k=2, affine (1, 1) gives n(n+1)/2") {
        const auto spec = StructureSpec::affine(2, 1.0, 1.0);
        auto F = solve_structure_function(spec, 20);
        for (int s = 0; s < 2; ++s)
            for (int n = 0; n <= 20; ++n) {
                CHECK(F(s, n) == doctest::Approx(n * (n + 1) / 2.0).epsilon(1e-15));
                CHECK(F(s, n) == doctest::Approx(oracle::telescoped_F(as_fn(spec), 2, s, n)).epsilon(1e-15));
            }
    }
    CHECK_THROWS_AS(solve_structure_function(StructureSpec::uniform(3, 1.0), 1), Error);
}

TEST_CASE("structure function recursion residual") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + trial % 5;
        const int d = 5 + trial;
        const auto table = dyadic_table(rng, k, d);
        const auto reals = random_table(rng, k, d);
        std::vector<double> cs(k);
        for (int s = 0; s < k; ++s) cs[s] = 0.5 * (s + trial % 3);
        const auto constant = StructureSpec::constant(cs);
        const auto affine = StructureSpec::affine(k, 0.37 - 0.05 * trial, 1.3);

        for (const auto *spec : {&table, &constant}) {
            auto F = solve_structure_function(*spec, d);
            for (int s = 0; s < k; ++s) {
                CHECK(F(s, 0) == 0.0);
                for (int n = 0; n < d; ++n) CHECK(F(s + 1, n + 1) - F(s, n) - spec->f(s, n) == 0.0);
            }
        }
        for (const auto *spec : {&affine, &reals}) {
            auto F = solve_structure_function(*spec, d);
            for (int s = 0; s < k; ++s)
                for (int n = 0; n < d; ++n) CHECK(std::abs(F(s + 1, n + 1) - F(s, n) - spec->f(s, n)) < 1e-13);
        }
    }
}

TEST_CASE("structure function matches the telescoped sum on random tables") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        const int d = 2 + static_cast<int>(rng() % 24);
        const auto spec = random_table(rng, k, d);
        auto F = solve_structure_function(spec, d);
        for (int s = 0; s < k; ++s)
            for (int n = 0; n <= d; ++n) CHECK(std::abs(F(s, n) - oracle::telescoped_F(as_fn(spec), k, s, n)) < 1e-12);
    }
}

TEST_CASE("effective dimension") {
    SUBCASE("f = 3 - N at k = 3 truncates where F first turns negative") {
        const auto spec = StructureSpec::affine(3, -1.0, 3.0);
        int expected = 0;
        while (oracle::telescoped_F(as_fn(spec), 3, 0, expected) >= 0.0) ++expected;
        CHECK(expected == 8);
        CHECK(effective_dimension(solve_structure_function(spec, 20), 20) == 8);
    }
    CHECK(effective_dimension(solve_structure_function(StructureSpec::affine(3, 0.0, 1.0), 30), 30) == 30);
    CHECK(effective_dimension(solve_structure_function(StructureSpec::uniform(3, 0.0), 10), 10) == 10);

    SUBCASE("degenerate space") {
        auto F = solve_structure_function(StructureSpec::uniform(2, -1.0), 6);
        try {
            effective_dimension(F, 6);
            FAIL("expected degenerate-space error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::kDegenerateSpace);
        }
    }

    SUBCASE("monotone in the requested dimension") {
        for (double a : {-0.5, -0.1, 0.0, 0.3}) {
            const auto spec = StructureSpec::affine(4, a, 2.0);
            int previous = 0;
            for (int d = 4; d <= 40; ++d) {
                int now = effective_dimension(solve_structure_function(spec, d), d);
                CHECK(now >= previous);
                CHECK(now <= d);
                previous = now;
            }
        }
    }
}

TEST_CASE("structure spec families") {
    const auto affine = StructureSpec::affine(3, 0.5, 1.0);
    CHECK(affine.f(7, -2) == 0.0);
    CHECK(affine.preset_label() == "poschl-teller");
    CHECK(StructureSpec::affine(3, 0.0, 1.0).preset_label() == "harmonic");
    CHECK(StructureSpec::affine(3, -0.1, 2.0).preset_label() == "morse");
    CHECK(StructureSpec::affine(3, 0.0, -1.0).preset_label().empty());

    const auto constant = StructureSpec::constant({1.0, 2.0, 3.0});
    CHECK(constant.f(4, 100) == 2.0);
    CHECK(constant.f(-1, 0) == 3.0);
    CHECK_THROWS_AS(StructureSpec::constant({1.0}), Error);
    CHECK_THROWS_AS(StructureSpec::affine(2, NAN, 1.0), Error);

    const auto table = StructureSpec::table({{0, {1.0, 2.0, 4.0}}, {-1, {0.0, 1.0}}});
    CHECK(table.f(0, 2) == 4.0);
    CHECK(table.f(1, -1) == 0.0);
    try {
        table.f(0, 3);
        FAIL("expected out-of-domain");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kOutOfDomain);
    }
    const auto extended = StructureSpec::table({{0, {1.0, 2.0, 4.0}}, {-1, {0.0, 1.0}}}, true);
    CHECK(extended.f(0, 3) == 6.0);
    CHECK(extended.f(0, -1) == 0.0);
    CHECK(extended.f(1, 3) == 4.0);
}

TEST_CASE("table CSV ingestion") {
    const auto spec = parse_table_csv("s,n,f\n0,0,1\n0,1,2\n1,0,3\n1,1,4\n");
    CHECK(spec.order() == 2);
    CHECK(spec.family() == Family::kTable);
    CHECK(spec.f(1, 1) == 4.0);
    CHECK(spec.f(0, 0) == 1.0);

    // Rows in any order, spaces tolerated.
    const auto shuffled = parse_table_csv("s, n, f\n1,1,4\n0,1,2\n1,0,3\n0,0,1\n");
    CHECK(shuffled.f(0, 1) == 2.0);

    CHECK_THROWS_AS(parse_table_csv("0,0,1\n1,0,1\n"), Error);            // header missing
    CHECK_THROWS_AS(parse_table_csv("s,n,f\n0,0,1\n0,2,1\n1,0,1\n"), Error);  // gap
    CHECK_THROWS_AS(parse_table_csv("s,n,f\n0,0,1\n"), Error);            // k = 1
    CHECK_THROWS_AS(parse_table_csv("s,n,f\n0,0,x\n1,0,1\n"), Error);     // bad number
    CHECK_THROWS_AS(parse_table_csv("s,n,f\n0,0,1\n0,0,2\n1,0,1\n"), Error);  // duplicate
    CHECK_THROWS_AS(load_table_csv("/nonexistent/table.csv"), Error);
}
