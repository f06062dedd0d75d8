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

#include "fsusy/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fsusy/error.hpp"

namespace fsusy {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string spectrum_csv(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas) {
    const GradedBasis &basis = doublet.basis();
    const int k = basis.order();
    std::ostringstream out;
    out << "s,n,energy,replica_s\n";
    for (int s = 0; s < k; ++s)
        for (int n = 0; n < basis.levels(); ++n)
            out << s << ',' << n << ',' << format_number(doublet.H.entries(basis.index(n, s), basis.index(n, s)).real())
                << ",\n";
    for (const auto &rd : replicas) {
        int first = wrap_sector(rd.s - 1, k);
        int second = wrap_sector(rd.s, k);
        for (int s : {std::min(first, second), std::max(first, second)})
            for (int n = 0; n < basis.levels(); ++n)
                out << s << ',' << n << ',' << format_number(rd.h.entries(basis.index(n, s), basis.index(n, s)).real())
                    << ',' << rd.s << '\n';
    }
    return out.str();
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

void write_spectrum_csv(const FsusyDoublet &doublet, const std::vector<ReplicaDoublet> &replicas,
                        const std::filesystem::path &path) {
    write_text(path, spectrum_csv(doublet, replicas));
}

std::string matrix_market(const OperatorMatrix &op) {
    const Matrix &m = op.entries;
    std::ostringstream body;
    long long stored = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const cplx z = m(i, j);
            if (z == cplx(0.0, 0.0)) continue;
            body << (i + 1) << ' ' << (j + 1) << ' ' << format_number(z.real()) << ' ' << format_number(z.imag()) << '\n';
            ++stored;
        }
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << "% " << op.label << '\n';
    out << m.rows() << ' ' << m.cols() << ' ' << stored << '\n';
    out << body.str();
    return out.str();
}

void write_matrix_market(const OperatorMatrix &op, const std::filesystem::path &path) {
    write_text(path, matrix_market(op));
}

std::vector<const OperatorMatrix *> system_operators(const System &system) {
    const AlgebraRep &rep = *system.rep;
    std::vector<const OperatorMatrix *> ops = {&rep.Xm, &rep.Xp, &rep.N, &rep.K};
    for (const auto &p : rep.projectors) ops.push_back(&p);
    ops.push_back(&system.doublet.Qm);
    ops.push_back(&system.doublet.Qp);
    ops.push_back(&system.doublet.H);
    for (const auto &rd : system.replicas) {
        ops.push_back(&rd.Xsm);
        ops.push_back(&rd.Xsp);
        ops.push_back(&rd.qm);
        ops.push_back(&rd.qp);
        ops.push_back(&rd.h);
    }
    return ops;
}

std::vector<std::filesystem::path> dump_operators(const System &system, const std::filesystem::path &directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec || !std::filesystem::is_directory(directory))
        throw Error(ErrorKind::kIo, "cannot create operator directory " + directory.string());
    std::vector<std::filesystem::path> written;
    for (const OperatorMatrix *op : system_operators(system)) {
        auto path = directory / (op->label + ".mtx");
        write_matrix_market(*op, path);
        written.push_back(std::move(path));
    }
    return written;
}

void write_report(const VerificationReport &report, const std::filesystem::path &path) {
    write_text(path, report.to_json().dump(2) + "\n");
}

}  // namespace fsusy
