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

#include "fsusy/qarith.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fsusy/error.hpp"

namespace fsusy {

RootOfUnity::RootOfUnity(int k) : k_(k), q_(primitive_root(k)) {}

namespace {

// exp(2 pi i r / k) for 0 <= r < k. Quarter turns are returned exactly;
// std::polar leaves ~1e-16 residue on the axes.
cplx unit_root(long long r, int k) {
    if ((4 * r) % k == 0) {
        switch ((4 * r) / k) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / k);
}

}  // namespace

cplx RootOfUnity::pow(long long j) const {
    long long r = j % k_;
    if (r < 0) r += k_;
    return unit_root(r, k_);
}

cplx primitive_root(int k) {
    if (k < 2) throw Error(ErrorKind::kInvalidOrder, "order k must be >= 2, got " + std::to_string(k));
    return unit_root(1, k);
}

cplx q_number(int n, cplx q) {
    if (q == cplx(1.0, 0.0)) throw Error(ErrorKind::kDivisionDegenerate, "[n]_q is degenerate at q = 1");
    cplx sum{0.0, 0.0};
    cplx term{1.0, 0.0};
    for (int j = 0; j < n; ++j) {
        sum += term;
        term *= q;
    }
    return sum;
}

cplx q_factorial(int n, cplx q) {
    cplx prod{1.0, 0.0};
    for (int j = 1; j <= n; ++j) prod *= q_number(j, q);
    return prod;
}

}  // namespace fsusy
