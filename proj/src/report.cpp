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

#include "fsusy/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#ifndef FSUSY_VERSION
#define FSUSY_VERSION "0.0.0"
#endif

namespace fsusy {

ReportEntry make_entry(std::string identity, std::string relation, double residual, double tolerance,
                       std::string window, bool informative) {
    ReportEntry e;
    e.identity = std::move(identity);
    e.relation = std::move(relation);
    e.residual = residual;
    e.tolerance = tolerance;
    e.pass = !std::isnan(residual) && residual <= tolerance;
    e.informative = informative;
    e.window = std::move(window);
    return e;
}

void append(ReportFragment &into, const ReportFragment &from) { into.insert(into.end(), from.begin(), from.end()); }

bool VerificationReport::verdict() const { return !construction_error && failed_count() == 0; }

int VerificationReport::failed_count() const {
    int n = 0;
    for (const auto &e : entries)
        if (!e.informative && !e.pass) ++n;
    return n;
}

nlohmann::ordered_json entry_to_json(const ReportEntry &e) {
    nlohmann::ordered_json j;
    j["identity"] = e.identity;
    j["relation"] = e.relation;
    if (e.residual && std::isfinite(*e.residual))
        j["residual"] = *e.residual;
    else
        j["residual"] = nullptr;
    j["tolerance"] = e.tolerance;
    j["pass"] = e.pass;
    j["informative"] = e.informative;
    j["window"] = e.window;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["config"] = config;
    auto list = nlohmann::ordered_json::array();
    for (const auto &e : entries) list.push_back(entry_to_json(e));
    j["entries"] = std::move(list);
    if (construction_error)
        j["construction_error"] = *construction_error;
    else
        j["construction_error"] = nullptr;
    j["verdict"] = verdict() ? "pass" : "fail";
    j["build"] = {{"version", version}, {"timestamp", timestamp}};
    return j;
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    for (const auto &e : entries) {
        char res[32];
        if (e.residual && !std::isnan(*e.residual))
            std::snprintf(res, sizeof res, "%.3g", *e.residual);
        else
            std::snprintf(res, sizeof res, "n/a");
        char tol[32];
        std::snprintf(tol, sizeof tol, "%.3g", e.tolerance);
        out << (e.informative ? "INFO" : (e.pass ? "PASS" : "FAIL")) << "  " << e.identity << "  residual=" << res
            << "  tol=" << tol << "  [" << e.window << "]";
        if (!e.note.empty()) out << "  (" << e.note << ")";
        out << '\n';
    }
    if (construction_error) out << "ERROR  " << *construction_error << '\n';
    out << "verdict: " << (verdict() ? "pass" : "fail") << " (" << failed_count() << " failed)\n";
    return out.str();
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const char *library_version() { return FSUSY_VERSION; }

}  // namespace fsusy
