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

#include "fsusy/suite.hpp"

#include "fsusy/error.hpp"
#include "fsusy/realization.hpp"

namespace fsusy {

System build_system(const StructureSpec &spec, int requested_d, RootBranch branch) {
    auto rep = std::make_shared<const AlgebraRep>(build_rep(spec, requested_d));
    FsusyDoublet doublet = build_doublet(rep);
    std::vector<ReplicaDoublet> replicas = build_replicas(doublet, branch);
    return System{requested_d, std::move(rep), std::move(doublet), std::move(replicas)};
}

nlohmann::ordered_json config_echo(const RunConfig &cfg, const StructureSpec *spec, int effective_d) {
    nlohmann::ordered_json j;
    j["k"] = cfg.k;
    j["d_requested"] = cfg.d;
    if (effective_d > 0)
        j["d_effective"] = effective_d;
    else
        j["d_effective"] = nullptr;
    j["truncated"] = effective_d > 0 && effective_d < cfg.d;
    j["family"] = cfg.family;
    if (cfg.family == "affine") {
        j["a"] = cfg.a;
        j["b"] = cfg.b;
        if (spec != nullptr) j["preset"] = spec->preset_label();
    } else if (cfg.family == "constant" && spec != nullptr) {
        j["constants"] = spec->constants();
    } else if (cfg.family == "table") {
        j["table"] = cfg.table;
        j["table_extension"] = cfg.table_extension;
    }
    j["margin"] = cfg.effective_margin();
    j["tolerance"] = cfg.tolerance;
    return j;
}

ReportFragment verify_system(const System &system, int margin, const Tolerances &tol) {
    const AlgebraRep &rep = *system.rep;
    ReportFragment out;
    append(out, verify_rep_structure(rep, tol));
    append(out, verify_wk_relations(rep, margin, tol));
    append(out, verify_hamiltonian(system.doublet, tol));
    append(out, verify_fsusy(system.doublet, margin, tol));
    for (const auto &rd : system.replicas) append(out, verify_replica(rd, system.doublet, margin, tol));
    append(out, check_isospectrality(system.doublet, margin, tol));
    append(out, verify_sum_identity(system.doublet, system.replicas, margin, tol));

    for (BosonVariant variant : {BosonVariant::kSector, BosonVariant::kSkewed}) {
        try {
            TensorRealization t = build_tensor_realization(rep.order(), rep.levels(), rep.spec, variant);
            append(out, verify_boson_pairs(t, margin, tol));
            append(out, compare_realizations(t, rep, margin, tol));
        } catch (const Error &e) {
            ReportEntry entry;
            entry.identity = std::string("tensor/") + variant_name(variant) + ": construction";
            entry.relation = "realization";
            entry.informative = true;
            entry.window = "n/a";
            entry.note = e.what();
            out.push_back(std::move(entry));
        }
    }
    return out;
}

VerificationReport run_verification_suite(const RunConfig &cfg) {
    cfg.validate();
    VerificationReport report;
    report.version = library_version();
    report.timestamp = utc_timestamp();
    const Tolerances tol{cfg.tolerance};
    int effective_d = 0;
    std::optional<StructureSpec> spec;
    try {
        spec = cfg.make_spec();
        System system = build_system(*spec, cfg.d);
        effective_d = system.levels();
        report.entries = verify_system(system, cfg.effective_margin(), tol);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::kConfig) throw;
        report.construction_error = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    report.config = config_echo(cfg, spec ? &*spec : nullptr, effective_d);
    return report;
}

}  // namespace fsusy
