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

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "fsusy/fock.hpp"
#include "fsusy/qarith.hpp"

namespace fsusy {

using Matrix = Eigen::MatrixXcd;

/// A dense complex matrix over the graded basis, tagged with a label that is
/// unique within one run (it doubles as the dump file stem).
struct OperatorMatrix {
    std::string label;
    Matrix entries;

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// The set of basis states whose columns a residual is measured on.
class Window {
   public:
    static Window full(const GradedBasis &basis);
    /// States with n <= d - 1 - margin. Requires d - margin >= 2.
    static Window safe(const GradedBasis &basis, int margin);

    /// Levels m <= d - 1 - margin of a single d-level mode.
    static Window levels(int d, int margin);

    /// Same window with the listed basis states removed.
    Window excluding(const std::vector<int> &indices, const std::string &note) const;

    bool contains(int i) const { return mask_[i]; }
    int dim() const { return static_cast<int>(mask_.size()); }
    int size() const;
    const std::string &description() const { return description_; }

   private:
    Window(std::vector<bool> mask, std::string description)
        : mask_(std::move(mask)), description_(std::move(description)) {}

    std::vector<bool> mask_;
    std::string description_;
};

/// ||A P_W||_F.
double window_norm(const Matrix &a, const Window &w);

/// ||(A - B) P_W||_F / max(1, ||A P_W||_F).
double residual(const Matrix &a, const Matrix &b, const Window &w);

Matrix commutator(const Matrix &a, const Matrix &b);
Matrix anticommutator(const Matrix &a, const Matrix &b);
Matrix power(const Matrix &a, int e);

/// Diagonal operator with entry value(n, s) at |n, s>.
Matrix diagonal_operator(const GradedBasis &basis, const std::function<double(int, int)> &value);

}  // namespace fsusy
