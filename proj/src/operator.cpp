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

#include "fsusy/operator.hpp"

#include <algorithm>
#include <cmath>

#include "fsusy/error.hpp"

namespace fsusy {

Window Window::full(const GradedBasis &basis) {
    return Window(std::vector<bool>(static_cast<std::size_t>(basis.dim()), true), "full space");
}

Window Window::safe(const GradedBasis &basis, int margin) {
    if (margin < 1) throw Error(ErrorKind::kWindowTooSmall, "margin must be >= 1");
    if (basis.levels() - margin < 2)
        throw Error(ErrorKind::kWindowTooSmall, "safe window is too small: d = " + std::to_string(basis.levels()) +
                                                    ", margin = " + std::to_string(margin));
    const int top = basis.levels() - 1 - margin;
    std::vector<bool> mask(static_cast<std::size_t>(basis.dim()));
    for (int i = 0; i < basis.dim(); ++i) mask[i] = basis.level(i) <= top;
    return Window(std::move(mask), "n <= " + std::to_string(top));
}

Window Window::levels(int d, int margin) {
    if (margin < 1 || d - margin < 2)
        throw Error(ErrorKind::kWindowTooSmall, "safe window is too small: d = " + std::to_string(d) +
                                                    ", margin = " + std::to_string(margin));
    std::vector<bool> mask(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) mask[m] = m <= d - 1 - margin;
    return Window(std::move(mask), "m <= " + std::to_string(d - 1 - margin));
}

Window Window::excluding(const std::vector<int> &indices, const std::string &note) const {
    auto mask = mask_;
    for (int i : indices) mask[i] = false;
    return Window(std::move(mask), description_ + ", " + note);
}

int Window::size() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), true)); }

double window_norm(const Matrix &a, const Window &w) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (w.contains(static_cast<int>(j))) sum += a.col(j).squaredNorm();
    return std::sqrt(sum);
}

double residual(const Matrix &a, const Matrix &b, const Window &w) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.cols() != w.dim())
        throw Error(ErrorKind::kDimensionMismatch, "residual operands have mismatched shapes");
    return window_norm(a - b, w) / std::max(1.0, window_norm(a, w));
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

Matrix anticommutator(const Matrix &a, const Matrix &b) { return a * b + b * a; }

Matrix power(const Matrix &a, int e) {
    Matrix out = Matrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

Matrix diagonal_operator(const GradedBasis &basis, const std::function<double(int, int)> &value) {
    Matrix out = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) out(i, i) = value(basis.level(i), basis.sector(i));
    return out;
}

}  // namespace fsusy
