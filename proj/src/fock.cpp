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

#include "fsusy/fock.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fsusy/error.hpp"

namespace fsusy {

const char *family_name(Family family) {
    switch (family) {
        case Family::kConstant: return "constant";
        case Family::kAffine: return "affine";
        case Family::kTable: return "table";
    }
    return "unknown";
}

namespace {

void require_order(int k) {
    if (k < 2) throw Error(ErrorKind::kInvalidOrder, "order k must be >= 2, got " + std::to_string(k));
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) throw Error(ErrorKind::kConfig, std::string("non-finite ") + what);
}

double extrapolate(const TableSector &t, long long n) {
    const auto &v = t.values;
    if (v.size() == 1) return v.front();
    long long last = t.first_n + static_cast<long long>(v.size()) - 1;
    if (n < t.first_n) {
        double slope = v[1] - v[0];
        return v[0] + slope * static_cast<double>(n - t.first_n);
    }
    double slope = v[v.size() - 1] - v[v.size() - 2];
    return v.back() + slope * static_cast<double>(n - last);
}

}  // namespace

StructureSpec StructureSpec::constant(std::vector<double> per_sector) {
    require_order(static_cast<int>(per_sector.size()));
    for (double c : per_sector) require_finite(c, "constant structure value");
    StructureSpec spec;
    spec.k_ = static_cast<int>(per_sector.size());
    spec.family_ = Family::kConstant;
    spec.constants_ = std::move(per_sector);
    return spec;
}

StructureSpec StructureSpec::uniform(int k, double c) {
    require_order(k);
    return constant(std::vector<double>(static_cast<std::size_t>(k), c));
}

StructureSpec StructureSpec::affine(int k, double a, double b) {
    require_order(k);
    require_finite(a, "affine slope");
    require_finite(b, "affine intercept");
    StructureSpec spec;
    spec.k_ = k;
    spec.family_ = Family::kAffine;
    spec.a_ = a;
    spec.b_ = b;
    return spec;
}

StructureSpec StructureSpec::table(std::vector<TableSector> sectors, bool affine_extension) {
    require_order(static_cast<int>(sectors.size()));
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        if (sectors[s].values.empty())
            throw Error(ErrorKind::kConfig, "table sector " + std::to_string(s) + " has no values");
        for (double v : sectors[s].values) require_finite(v, "table structure value");
    }
    StructureSpec spec;
    spec.k_ = static_cast<int>(sectors.size());
    spec.family_ = Family::kTable;
    spec.table_ = std::move(sectors);
    spec.affine_extension_ = affine_extension;
    return spec;
}

double StructureSpec::f(long long s, long long n) const {
    int sector = wrap_sector(s, k_);
    switch (family_) {
        case Family::kConstant: return constants_[sector];
        case Family::kAffine: return a_ * static_cast<double>(n) + b_;
        case Family::kTable: {
            const TableSector &t = table_[sector];
            long long offset = n - t.first_n;
            if (offset >= 0 && offset < static_cast<long long>(t.values.size())) return t.values[offset];
            if (affine_extension_) return extrapolate(t, n);
            throw Error(ErrorKind::kOutOfDomain, "table has no value for f_" + std::to_string(sector) + "(" +
                                                     std::to_string(n) + ")");
        }
    }
    return 0.0;
}

std::string StructureSpec::preset_label() const {
    if (family_ != Family::kAffine || !(b_ > 0.0)) return {};
    if (a_ == 0.0) return "harmonic";
    return a_ < 0.0 ? "morse" : "poschl-teller";
}

StructureSpec parse_table_csv(const std::string &text, bool affine_extension) {
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string x) {
        auto issp = [](unsigned char c) { return std::isspace(c); };
        x.erase(x.begin(), std::find_if_not(x.begin(), x.end(), issp));
        x.erase(std::find_if_not(x.rbegin(), x.rend(), issp).base(), x.end());
        return x;
    };
    auto split = [&](const std::string &row) {
        std::vector<std::string> cells;
        std::stringstream ss(row);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
        return cells;
    };

    while (std::getline(in, line) && trim(line).empty()) {
    }
    auto header = split(line);
    if (header != std::vector<std::string>{"s", "n", "f"})
        throw Error(ErrorKind::kConfig, "table CSV header must be 's,n,f'");

    std::map<long, std::map<long, double>> cells;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto row = split(line);
        if (row.size() != 3) throw Error(ErrorKind::kConfig, "table CSV line " + std::to_string(lineno) + ": expected 3 columns");
        long s = 0, n = 0;
        double f = 0.0;
        auto bad = [&] { return Error(ErrorKind::kConfig, "table CSV line " + std::to_string(lineno) + ": unparsable value"); };
        if (std::from_chars(row[0].data(), row[0].data() + row[0].size(), s).ec != std::errc{}) throw bad();
        if (std::from_chars(row[1].data(), row[1].data() + row[1].size(), n).ec != std::errc{}) throw bad();
        if (std::from_chars(row[2].data(), row[2].data() + row[2].size(), f).ec != std::errc{}) throw bad();
        if (!cells[s].emplace(n, f).second)
            throw Error(ErrorKind::kConfig, "table CSV line " + std::to_string(lineno) + ": duplicate (s, n)");
    }
    if (cells.empty()) throw Error(ErrorKind::kConfig, "table CSV has no rows");

    long k = cells.rbegin()->first + 1;
    if (cells.begin()->first != 0 || static_cast<long>(cells.size()) != k)
        throw Error(ErrorKind::kConfig, "table CSV must cover sectors 0..k-1 without gaps");
    std::vector<TableSector> sectors;
    for (auto &[s, row] : cells) {
        TableSector t;
        t.first_n = row.begin()->first;
        long expect = t.first_n;
        for (auto &[n, f] : row) {
            if (n != expect)
                throw Error(ErrorKind::kConfig, "table CSV sector " + std::to_string(s) + ": n values not contiguous");
            t.values.push_back(f);
            ++expect;
        }
        sectors.push_back(std::move(t));
    }
    return StructureSpec::table(std::move(sectors), affine_extension);
}

StructureSpec load_table_csv(const std::filesystem::path &path, bool affine_extension) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kIo, "cannot open table CSV " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table_csv(buf.str(), affine_extension);
}

GradedBasis::GradedBasis(int k, int d) : k_(k), d_(d) {
    require_order(k);
    if (d < 1) throw Error(ErrorKind::kDegenerateSpace, "basis needs at least one level per sector");
}

StructureFunction::StructureFunction(int k, std::vector<std::vector<double>> values)
    : k_(k), values_(std::move(values)) {
    require_order(k);
    if (static_cast<int>(values_.size()) != k || values_.front().empty())
        throw Error(ErrorKind::kDimensionMismatch, "structure function needs k non-empty sectors");
}

StructureFunction StructureFunction::truncated(int top) const {
    auto values = values_;
    for (auto &v : values) v.resize(static_cast<std::size_t>(top) + 1);
    return StructureFunction(k_, std::move(values));
}

StructureFunction solve_structure_function(const StructureSpec &spec, int d) {
    if (d < 2) throw Error(ErrorKind::kDegenerateSpace, "structure function needs d >= 2");
    const int k = spec.order();
    std::vector<std::vector<double>> F(k, std::vector<double>(static_cast<std::size_t>(d) + 1, 0.0));
    for (int n = 0; n < d; ++n)
        for (int s = 0; s < k; ++s) F[wrap_sector(s + 1, k)][n + 1] = F[s][n] + spec.f(s, n);
    return StructureFunction(k, std::move(F));
}

double admissible_negative_slack(const StructureFunction &F) {
    double scale = 1.0;
    for (int s = 0; s < F.order(); ++s)
        for (double v : F.sector(s)) scale = std::max(scale, std::abs(v));
    return 1e-12 * scale;
}

int effective_dimension(const StructureFunction &F, int requested_d) {
    const double slack = admissible_negative_slack(F);
    int limit = std::min(requested_d, F.top() + 1);
    int d = limit;
    for (int n = 0; n < limit && d == limit; ++n)
        for (int s = 0; s < F.order(); ++s)
            if (F(s, n) < -slack) {
                d = n;
                break;
            }
    if (d < 2)
        throw Error(ErrorKind::kDegenerateSpace,
                    "structure function is negative below n = 2 (effective dimension " + std::to_string(d) + ")");
    return d;
}

}  // namespace fsusy
