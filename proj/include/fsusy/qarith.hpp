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

#include <complex>

namespace fsusy {

using cplx = std::complex<double>;

/// Primitive k-th root of unity q = exp(2 pi i / k).
class RootOfUnity {
   public:
    explicit RootOfUnity(int k);

    int order() const { return k_; }
    cplx value() const { return q_; }
    /// q^j for any integer j, evaluated directly from the angle so that
    /// q^j and q^(j + k) are bit-identical.
    cplx pow(long long j) const;

   private:
    int k_;
    cplx q_;
};

cplx primitive_root(int k);

/// [n]_q = 1 + q + ... + q^(n-1).
cplx q_number(int n, cplx q);

/// [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
cplx q_factorial(int n, cplx q);

}  // namespace fsusy
