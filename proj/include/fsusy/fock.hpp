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

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace fsusy {

/// Reduces a sector index into [0, k).
constexpr int wrap_sector(long long s, int k) {
    long long r = s % k;
    return static_cast<int>(r < 0 ? r + k : r);
}

enum class Family { kConstant, kAffine, kTable };

const char *family_name(Family family);

/// Tabulated f_s(n) for one sector over a contiguous range of n.
struct TableSector {
    long first_n = 0;
    std::vector<double> values;
};

/// The family of real functions f_s(N), s = 0..k-1, defining the algebra.
///
/// Constant and affine families are defined for every integer argument.
/// Table families are defined on the tabulated range only, unless affine
/// extension is enabled, in which case each sector is extended linearly
/// through its two outermost points.
class StructureSpec {
   public:
    static StructureSpec constant(std::vector<double> per_sector);
    static StructureSpec uniform(int k, double c);
    static StructureSpec affine(int k, double a, double b);
    static StructureSpec table(std::vector<TableSector> sectors, bool affine_extension = false);

    int order() const { return k_; }
    Family family() const { return family_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<double> &constants() const { return constants_; }
    const std::vector<TableSector> &table_sectors() const { return table_; }
    bool affine_extension() const { return affine_extension_; }

    /// f_s(n); s is reduced modulo k. Throws kOutOfDomain for table lookups
    /// outside the tabulated range when extension is off.
    double f(long long s, long long n) const;

    /// "harmonic", "morse", "poschl-teller" for the matching affine
    /// parameter signs, empty otherwise.
    std::string preset_label() const;

   private:
    StructureSpec() = default;

    int k_ = 0;
    Family family_ = Family::kConstant;
    double a_ = 0.0;
    double b_ = 0.0;
    std::vector<double> constants_;
    std::vector<TableSector> table_;
    bool affine_extension_ = false;
};

/// Reads a table spec from CSV with header `s,n,f`. Every sector 0..k-1 must
/// appear and each sector's n values must be contiguous.
StructureSpec load_table_csv(const std::filesystem::path &path, bool affine_extension = false);
StructureSpec parse_table_csv(const std::string &text, bool affine_extension = false);

/// States |n, s> with 0 <= n < d and 0 <= s < k, indexed s * d + n.
class GradedBasis {
   public:
    GradedBasis(int k, int d);

    int order() const { return k_; }
    int levels() const { return d_; }
    int dim() const { return k_ * d_; }

    int index(int n, int s) const { return s * d_ + n; }
    int level(int i) const { return i % d_; }
    int sector(int i) const { return i / d_; }

   private:
    int k_;
    int d_;
};

/// Values F_s(n) for 0 <= s < k and 0 <= n <= top().
class StructureFunction {
   public:
    StructureFunction(int k, std::vector<std::vector<double>> values);

    int order() const { return k_; }
    int top() const { return static_cast<int>(values_.front().size()) - 1; }
    double operator()(long long s, int n) const { return values_[wrap_sector(s, k_)][n]; }
    const std::vector<double> &sector(int s) const { return values_[wrap_sector(s, k_)]; }

    /// Copy restricted to n <= top.
    StructureFunction truncated(int top) const;

   private:
    int k_;
    std::vector<std::vector<double>> values_;
};

/// Solves F_{s+1}(n+1) - F_s(n) = f_s(n) with F_s(0) = 0 for n <= d.
StructureFunction solve_structure_function(const StructureSpec &spec, int d);

/// Values in [-admissible_negative_slack(F), 0) count as zero.
double admissible_negative_slack(const StructureFunction &F);

/// Largest d' <= requested_d with F_s(n) >= 0 for all s and n < d'.
int effective_dimension(const StructureFunction &F, int requested_d);

}  // namespace fsusy
