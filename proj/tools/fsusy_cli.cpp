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

// Command-line front end: verify, spectrum, dump and sweep.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fsusy/config.hpp"
#include "fsusy/error.hpp"
#include "fsusy/io.hpp"
#include "fsusy/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kMaxConstantFlags = 16;

const std::map<std::string, std::string> kKeyHelp = {
    {"k", "order of the fractional supersymmetry (>= 2)"},
    {"d", "requested levels per sector (>= 4)"},
    {"family", "structure function family: constant, affine or table"},
    {"a", "affine slope, f_s(n) = a n + b"},
    {"b", "affine intercept"},
    {"table", "CSV file with columns s,n,f"},
    {"table_extension", "extrapolate table values linearly (true/false)"},
    {"margin", "levels excluded below the truncation ceiling (default k)"},
    {"tolerance", "base residual tolerance (default 1e-10)"},
    {"out_report", "JSON report path"},
    {"out_spectrum", "spectrum CSV path"},
    {"out_operators", "Matrix Market output directory"},
};

/// Flags that mirror config keys. Only flags given on the command line
/// override the config file.
struct SharedFlags {
    std::string config_path;
    std::map<std::string, std::string> values;

    void attach(CLI::App *app) {
        app->add_option("--config", config_path, "flat key = value config file");
        for (const std::string &key : fsusy::config_keys()) {
            std::string names = "--" + key;
            if (key.find('_') != std::string::npos) {
                std::string dashed = key;
                std::replace(dashed.begin(), dashed.end(), '_', '-');
                names += ",--" + dashed;
            }
            app->add_option(names, values[key], kKeyHelp.at(key));
        }
        for (int s = 0; s < kMaxConstantFlags; ++s)
            app->add_option("--c" + std::to_string(s), values["c" + std::to_string(s)],
                            s == 0 ? "constant f_s for sector s (missing sectors take c0; c0 defaults to 1)" : "");
    }

    fsusy::RunConfig resolve(const CLI::App *app) const {
        fsusy::KeyValues merged;
        if (!config_path.empty()) merged = fsusy::read_config_file(config_path);
        for (const auto &[key, value] : values)
            if (app->count("--" + key) > 0 || (key.find('_') != std::string::npos && app->count("--" + dashed(key)) > 0))
                merged[key] = value;
        return fsusy::config_from_values(merged, fsusy::default_tolerance_from_env());
    }

    static std::string dashed(std::string key) {
        std::replace(key.begin(), key.end(), '_', '-');
        return key;
    }
};

void emit_outputs(const fsusy::RunConfig &cfg, const fsusy::System &system) {
    if (!cfg.out_spectrum.empty()) fsusy::write_spectrum_csv(system.doublet, system.replicas, cfg.out_spectrum);
    if (!cfg.out_operators.empty()) fsusy::dump_operators(system, cfg.out_operators);
}

int run_verify(const fsusy::RunConfig &cfg, bool quiet) {
    fsusy::VerificationReport report = fsusy::run_verification_suite(cfg);
    if (!quiet) std::cout << report.summary();
    if (!cfg.out_report.empty()) fsusy::write_report(report, cfg.out_report);
    if (report.construction_error) {
        std::cerr << "error: " << *report.construction_error << '\n';
        return kExitInvalid;
    }
    if (!cfg.out_spectrum.empty() || !cfg.out_operators.empty())
        emit_outputs(cfg, fsusy::build_system(cfg.make_spec(), cfg.d));
    return report.verdict() ? kExitPass : kExitFail;
}

int run_spectrum(fsusy::RunConfig cfg, const std::string &out) {
    if (!out.empty()) cfg.out_spectrum = out;
    if (cfg.out_spectrum.empty()) throw fsusy::Error(fsusy::ErrorKind::kConfig, "spectrum needs --out_spectrum");
    fsusy::System system = fsusy::build_system(cfg.make_spec(), cfg.d);
    fsusy::write_spectrum_csv(system.doublet, system.replicas, cfg.out_spectrum);
    return kExitPass;
}

int run_dump(fsusy::RunConfig cfg, const std::string &out) {
    if (!out.empty()) cfg.out_operators = out;
    if (cfg.out_operators.empty()) throw fsusy::Error(fsusy::ErrorKind::kConfig, "dump needs --out_operators");
    fsusy::System system = fsusy::build_system(cfg.make_spec(), cfg.d);
    auto files = fsusy::dump_operators(system, cfg.out_operators);
    std::cout << "wrote " << files.size() << " operators to " << cfg.out_operators << '\n';
    return kExitPass;
}

struct SweepRange {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    double at(int i) const { return steps <= 1 ? min : min + (max - min) * i / (steps - 1); }
};

int run_sweep(fsusy::RunConfig base, const SweepRange &as, const SweepRange &bs, const std::string &out_dir,
              unsigned jobs) {
    if (as.steps < 1 || bs.steps < 1) throw fsusy::Error(fsusy::ErrorKind::kConfig, "sweep steps must be >= 1");
    if (out_dir.empty()) throw fsusy::Error(fsusy::ErrorKind::kConfig, "sweep needs --out-dir");
    base.family = "affine";
    base.validate();
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw fsusy::Error(fsusy::ErrorKind::kIo, "cannot create sweep directory " + out_dir);

    struct Point {
        double a, b;
        std::string file;
        std::optional<fsusy::VerificationReport> report;
        std::string failure;
    };
    std::vector<Point> points;
    for (int i = 0; i < as.steps; ++i)
        for (int j = 0; j < bs.steps; ++j) {
            char name[32];
            std::snprintf(name, sizeof name, "point_%04zu.json", points.size());
            points.push_back({as.at(i), bs.at(j), name, std::nullopt, {}});
        }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            Point &p = points[i];
            fsusy::RunConfig cfg = base;
            cfg.a = p.a;
            cfg.b = p.b;
            try {
                p.report = fsusy::run_verification_suite(cfg);
                fsusy::write_report(*p.report, std::filesystem::path(out_dir) / p.file);
            } catch (const std::exception &e) {
                p.failure = e.what();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();

    int exit_code = kExitPass;
    nlohmann::ordered_json index;
    index["k"] = base.k;
    index["d_requested"] = base.d;
    index["points"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point &p = points[i];
        nlohmann::ordered_json row;
        row["index"] = i;
        row["a"] = p.a;
        row["b"] = p.b;
        row["file"] = p.file;
        if (!p.failure.empty() || !p.report) {
            row["verdict"] = "error";
            row["error"] = p.failure;
            exit_code = kExitInvalid;
        } else {
            row["verdict"] = p.report->verdict() ? "pass" : "fail";
            row["d_effective"] = p.report->config["d_effective"];
            row["preset"] = p.report->config.value("preset", "");
            if (p.report->construction_error) {
                row["error"] = *p.report->construction_error;
                exit_code = kExitInvalid;
            } else if (!p.report->verdict() && exit_code == kExitPass) {
                exit_code = kExitFail;
            }
        }
        index["points"].push_back(std::move(row));
    }
    fsusy::write_text(std::filesystem::path(out_dir) / "index.json", index.dump(2) + "\n");
    std::cout << "swept " << points.size() << " points into " << out_dir << '\n';
    return exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fractional supersymmetric quantum mechanics on truncated graded Fock spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fsusy::library_version());

    bool quiet = false;
    auto *verify = app.add_subcommand("verify", "run the verification suite and report");
    SharedFlags verify_flags;
    verify_flags.attach(verify);
    verify->add_flag("--quiet", quiet, "suppress the human-readable summary");

    auto *spectrum = app.add_subcommand("spectrum", "write the partner and replica spectra as CSV");
    SharedFlags spectrum_flags;
    spectrum_flags.attach(spectrum);
    std::string spectrum_out;
    spectrum->add_option("-o,--out", spectrum_out, "CSV path (same as --out_spectrum)");

    auto *dump = app.add_subcommand("dump", "write every operator as a Matrix Market file");
    SharedFlags dump_flags;
    dump_flags.attach(dump);
    std::string dump_out;
    dump->add_option("-o,--out", dump_out, "directory (same as --out_operators)");

    auto *sweep = app.add_subcommand("sweep", "verify a grid of affine (a, b) structure functions");
    SharedFlags sweep_flags;
    sweep_flags.attach(sweep);
    SweepRange as, bs;
    std::string sweep_dir;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("--a-min", as.min);
    sweep->add_option("--a-max", as.max);
    sweep->add_option("--a-steps", as.steps);
    sweep->add_option("--b-min", bs.min);
    sweep->add_option("--b-max", bs.max);
    sweep->add_option("--b-steps", bs.steps);
    sweep->add_option("--out-dir", sweep_dir)->required();
    sweep->add_option("-j,--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    try {
        if (verify->parsed()) return run_verify(verify_flags.resolve(verify), quiet);
        if (spectrum->parsed()) return run_spectrum(spectrum_flags.resolve(spectrum), spectrum_out);
        if (dump->parsed()) return run_dump(dump_flags.resolve(dump), dump_out);
        if (sweep->parsed()) return run_sweep(sweep_flags.resolve(sweep), as, bs, sweep_dir, jobs);
    } catch (const fsusy::Error &e) {
        std::cerr << "error (" << fsusy::error_kind_name(e.kind()) << "): " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
