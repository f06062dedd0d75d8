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

#include "fsusy/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fsusy/error.hpp"

namespace fsusy {

namespace {

std::string trim(const std::string &x) {
    auto b = std::find_if_not(x.begin(), x.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(x.rbegin(), x.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

bool is_constant_key(const std::string &key) {
    return key.size() > 1 && key[0] == 'c' &&
           std::all_of(key.begin() + 1, key.end(), [](unsigned char c) { return std::isdigit(c); });
}

int to_int(const std::string &key, const std::string &v) {
    std::size_t pos = 0;
    try {
        long value = std::stol(v, &pos);
        if (pos == v.size() && value >= -(1L << 30) && value <= (1L << 30)) return static_cast<int>(value);
    } catch (const std::exception &) {
    }
    throw Error(ErrorKind::kConfig, "key '" + key + "' expects an integer, got '" + v + "'");
}

double to_double(const std::string &key, const std::string &v) {
    std::size_t pos = 0;
    try {
        double value = std::stod(v, &pos);
        if (pos == v.size() && std::isfinite(value)) return value;
    } catch (const std::exception &) {
    }
    throw Error(ErrorKind::kConfig, "key '" + key + "' expects a number, got '" + v + "'");
}

bool to_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1" || v == "yes" || v == "affine") return true;
    if (v == "false" || v == "0" || v == "no" || v == "none") return false;
    throw Error(ErrorKind::kConfig, "key '" + key + "' expects a boolean, got '" + v + "'");
}

}  // namespace

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = {"k",      "d",         "family",     "a",           "b",
                                                  "table",  "table_extension", "margin", "tolerance", "out_report",
                                                  "out_spectrum", "out_operators"};
    return keys;
}

KeyValues parse_key_values(const std::string &text) {
    KeyValues out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::kConfig, "config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        const auto &keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end() && !is_constant_key(key))
            throw Error(ErrorKind::kConfig, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = value;
    }
    return out;
}

KeyValues read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kIo, "cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str());
}

RunConfig config_from_values(const KeyValues &values, double default_tolerance) {
    RunConfig cfg;
    cfg.tolerance = default_tolerance;
    for (const auto &[key, v] : values) {
        if (key == "k") cfg.k = to_int(key, v);
        else if (key == "d") cfg.d = to_int(key, v);
        else if (key == "family") cfg.family = v;
        else if (key == "a") cfg.a = to_double(key, v);
        else if (key == "b") cfg.b = to_double(key, v);
        else if (key == "table") cfg.table = v;
        else if (key == "table_extension") cfg.table_extension = to_bool(key, v);
        else if (key == "margin") cfg.margin = to_int(key, v);
        else if (key == "tolerance") cfg.tolerance = to_double(key, v);
        else if (key == "out_report") cfg.out_report = v;
        else if (key == "out_spectrum") cfg.out_spectrum = v;
        else if (key == "out_operators") cfg.out_operators = v;
        else if (is_constant_key(key)) cfg.constants[to_int(key, key.substr(1))] = to_double(key, v);
        else throw Error(ErrorKind::kConfig, "unknown key '" + key + "'");
    }
    return cfg;
}

double default_tolerance_from_env() {
    const char *env = std::getenv("FSUSY_TOLERANCE");
    if (env == nullptr || *env == '\0') return 1e-10;
    double value = to_double("FSUSY_TOLERANCE", trim(env));
    if (!(value > 0.0)) throw Error(ErrorKind::kConfig, "FSUSY_TOLERANCE must be positive");
    return value;
}

void RunConfig::validate() const {
    if (k < 2) throw Error(ErrorKind::kConfig, "k must be >= 2 (got " + std::to_string(k) + ")");
    if (d < 4) throw Error(ErrorKind::kConfig, "d must be >= 4 (got " + std::to_string(d) + ")");
    if (effective_margin() < 1) throw Error(ErrorKind::kConfig, "margin must be >= 1");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::kConfig, "tolerance must be > 0");
    if (family != "constant" && family != "affine" && family != "table")
        throw Error(ErrorKind::kConfig, "family must be constant, affine or table (got '" + family + "')");
    if (family == "table" && table.empty()) throw Error(ErrorKind::kConfig, "family = table needs a table path");
    for (const auto &[s, c] : constants)
        if (s < 0 || s >= k)
            throw Error(ErrorKind::kConfig, "constant c" + std::to_string(s) + " is outside sectors 0..k-1");
}

StructureSpec RunConfig::make_spec() const {
    validate();
    if (family == "affine") return StructureSpec::affine(k, a, b);
    if (family == "table") {
        StructureSpec spec = load_table_csv(table, table_extension);
        if (spec.order() != k)
            throw Error(ErrorKind::kConfig, "table covers " + std::to_string(spec.order()) + " sectors but k = " +
                                                std::to_string(k));
        return spec;
    }
    const double c0 = constants.count(0) ? constants.at(0) : 1.0;
    std::vector<double> cs(static_cast<std::size_t>(k), c0);
    for (const auto &[s, c] : constants) cs[s] = c;
    return StructureSpec::constant(std::move(cs));
}

}  // namespace fsusy
