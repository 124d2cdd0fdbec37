// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0
//
// susyq command line: parity analysis, superalgebra certification and
// spectrum checks for lattice Pauli operators, with machine-readable JSON
// reports. Exit codes: 0 pass, 1 a certified check failed, 2 usage or
// construction error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "susyq/catalog.hpp"
#include "susyq/report.hpp"
#include "susyq/spectral.hpp"
#include "susyq/susy.hpp"

namespace {

struct RunConfig {
    std::string builtin;
    std::string field_path;
    std::array<int, 3> grid_points{7, 7, 7};
    std::array<double, 3> grid_spacing{0.5, 0.5, 0.5};
    std::string boundary = "dirichlet";
    double tol_admissibility = susyq::kDefaultAdmissibilityTol;
    double tol_algebra = susyq::kDefaultAlgebraTol;
    double cluster_tol = susyq::kDefaultClusterRelTol;
    double zero_tol = susyq::kDefaultZeroTol;
    susyq::SamplerConfig sampler;
    std::string format = "json";
    std::string out_path;
    std::vector<std::string> stages{"analyze", "verify", "spectrum"};
};

template <typename T, std::size_t N>
std::array<T, N> parse_tuple(const std::string& text, const char* what) {
    std::array<T, N> out{};
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= N) throw susyq::Error(std::string(what) + " needs exactly 3 values");
        std::size_t used = 0;
        try {
            if constexpr (std::is_integral_v<T>)
                out[i] = static_cast<T>(std::stoll(item, &used));
            else
                out[i] = std::stod(item, &used);
        } catch (const std::exception&) {
            throw susyq::Error(std::string("cannot parse ") + what + " value '" + item + "'");
        }
        if (used != item.size())
            throw susyq::Error(std::string("cannot parse ") + what + " value '" + item + "'");
        ++i;
    }
    if (i != N) throw susyq::Error(std::string(what) + " needs exactly 3 values");
    return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw susyq::Error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw susyq::Error("invalid JSON in config '" + path + "': " + e.what());
    }
    if (j.contains("field")) {
        const auto& f = j.at("field");
        if (f.contains("builtin")) cfg.builtin = f.at("builtin").get<std::string>();
        if (f.contains("path")) cfg.field_path = f.at("path").get<std::string>();
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.contains("M")) cfg.grid_points = g.at("M").get<std::array<int, 3>>();
        if (g.contains("h")) cfg.grid_spacing = g.at("h").get<std::array<double, 3>>();
        if (g.contains("bc")) cfg.boundary = g.at("bc").get<std::string>();
    }
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (t.contains("admissibility")) cfg.tol_admissibility = t.at("admissibility").get<double>();
        if (t.contains("algebra")) cfg.tol_algebra = t.at("algebra").get<double>();
        if (t.contains("cluster_rel")) cfg.cluster_tol = t.at("cluster_rel").get<double>();
        if (t.contains("zero")) cfg.zero_tol = t.at("zero").get<double>();
    }
    if (j.contains("sampler")) {
        const auto& s = j.at("sampler");
        if (s.contains("count")) cfg.sampler.count = s.at("count").get<int>();
        if (s.contains("box")) cfg.sampler.box_half_width = s.at("box").get<double>();
        if (s.contains("seed")) cfg.sampler.seed = s.at("seed").get<std::uint64_t>();
    }
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
    if (j.contains("stages")) cfg.stages = j.at("stages").get<std::vector<std::string>>();
}

// Shared flags; config file values are applied first, explicit flags win.
struct CommonFlags {
    std::string config_path, builtin, field_path, grid, spacing, bc, format, out;
    double tol_adm = 0, tol_algebra = 0, cluster_tol = 0, zero_tol = 0;
    std::uint64_t seed = 0;

    CLI::Option *config_opt, *builtin_opt, *field_opt, *grid_opt, *spacing_opt, *bc_opt,
        *tol_adm_opt, *tol_algebra_opt, *cluster_opt, *zero_opt, *seed_opt, *format_opt, *out_opt;

    void add_to(CLI::App* app) {
        config_opt = app->add_option("--config", config_path, "JSON run configuration file");
        builtin_opt = app->add_option("--builtin", builtin, "builtin field name");
        field_opt = app->add_option("--field", field_path, "field definition file (JSON)");
        builtin_opt->excludes(field_opt);
        grid_opt = app->add_option("--grid", grid, "points per axis, Mx,My,Mz");
        spacing_opt = app->add_option("--spacing", spacing, "grid spacing, hx,hy,hz");
        bc_opt = app->add_option("--bc", bc, "boundary condition: dirichlet|periodic");
        tol_adm_opt = app->add_option("--tol-adm", tol_adm, "admissibility tolerance");
        tol_algebra_opt = app->add_option("--tol-algebra", tol_algebra, "superalgebra tolerance");
        cluster_opt = app->add_option("--cluster-tol", cluster_tol, "cluster relative tolerance");
        zero_opt = app->add_option("--zero-tol", zero_tol, "zero-mode tolerance");
        seed_opt = app->add_option("--seed", seed, "parity sampler seed");
        format_opt = app->add_option("--format", format, "output format: json|text");
        out_opt = app->add_option("--out", out, "write the report to this path");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (config_opt->count()) apply_config_file(cfg, config_path);
        if (builtin_opt->count()) {
            cfg.builtin = builtin;
            cfg.field_path.clear();
        }
        if (field_opt->count()) {
            cfg.field_path = field_path;
            cfg.builtin.clear();
        }
        if (grid_opt->count()) cfg.grid_points = parse_tuple<int, 3>(grid, "--grid");
        if (spacing_opt->count())
            cfg.grid_spacing = parse_tuple<double, 3>(spacing, "--spacing");
        if (bc_opt->count()) cfg.boundary = bc;
        if (tol_adm_opt->count()) cfg.tol_admissibility = tol_adm;
        if (tol_algebra_opt->count()) cfg.tol_algebra = tol_algebra;
        if (cluster_opt->count()) cfg.cluster_tol = cluster_tol;
        if (zero_opt->count()) cfg.zero_tol = zero_tol;
        if (seed_opt->count()) cfg.sampler.seed = seed;
        if (format_opt->count()) cfg.format = format;
        if (out_opt->count()) cfg.out_path = out;
        if (cfg.format != "json" && cfg.format != "text")
            throw susyq::Error("format must be 'json' or 'text'");
        for (double tol : {cfg.tol_admissibility, cfg.tol_algebra, cfg.cluster_tol, cfg.zero_tol})
            if (!(tol > 0.0)) throw susyq::Error("tolerances must be positive");
        return cfg;
    }
};

susyq::VectorPotentialSpec resolve_field(const RunConfig& cfg) {
    if (!cfg.builtin.empty()) return susyq::catalog_field(cfg.builtin).field;
    if (!cfg.field_path.empty()) return susyq::load_field_file(cfg.field_path);
    throw susyq::Error("no field given: use --builtin NAME or --field PATH");
}

susyq::Grid resolve_grid(const RunConfig& cfg) {
    return susyq::Grid::make(cfg.grid_points, cfg.grid_spacing,
                             susyq::boundary_from_name(cfg.boundary));
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw susyq::Error("cannot write to '" + cfg.out_path + "'");
    out << payload;
}

struct StageResult {
    susyq::ordered_json json;
    std::string text;
    bool pass = true;
};

StageResult stage_analyze(const RunConfig& cfg, const susyq::VectorPotentialSpec& field) {
    auto signature = susyq::classify_parity(field, cfg.sampler);
    auto prediction = susyq::predict_from_signature(signature);
    StageResult r;
    r.json = susyq::parity_report_json(field, signature, prediction, cfg.sampler,
                                       susyq::kDefaultParityTol);
    r.text = susyq::text_summary(field, signature, prediction);
    return r;
}

StageResult stage_verify(const RunConfig& cfg, const susyq::VectorPotentialSpec& field,
                         susyq::CertifiedStructure* keep = nullptr) {
    auto cert = susyq::certify(resolve_grid(cfg), field, cfg.tol_admissibility, cfg.tol_algebra);
    StageResult r;
    r.json = susyq::to_json(cert.report);
    r.text = susyq::text_summary(cert.report);
    r.pass = cert.report.pass;
    if (keep) *keep = std::move(cert);
    return r;
}

StageResult stage_spectrum(const RunConfig& cfg, susyq::CertifiedStructure& cert) {
    auto eigenvalues = susyq::eigen_spectrum(cert.set.hamiltonian);
    auto report = susyq::cluster_degeneracies(std::move(eigenvalues), cfg.cluster_tol,
                                              cfg.zero_tol);
    susyq::check_degeneracy_law(report, cert.set.supercharge_count);
    StageResult r;
    r.json = susyq::to_json(report);
    r.text = susyq::text_summary(report);
    r.pass = report.law_satisfied;
    return r;
}

int finish(const RunConfig& cfg, const StageResult& result) {
    if (cfg.format == "json")
        emit(cfg, susyq::dump_json_17(result.json) + "\n");
    else
        emit(cfg, result.text);
    return result.pass ? 0 : 1;
}

int cmd_catalog_list(const RunConfig& cfg) {
    std::string payload;
    for (const auto& name : susyq::catalog_names()) {
        auto entry = susyq::catalog_field(name);
        payload += susyq::dump_json_17(susyq::catalog_entry_json(entry)) + "\n";
    }
    emit(cfg, payload);
    return 0;
}

int cmd_run(const RunConfig& cfg) {
    auto field = resolve_field(cfg);
    susyq::ordered_json combined;
    std::string text;
    bool pass = true;
    susyq::CertifiedStructure cert;
    bool have_cert = false;
    for (const auto& stage : cfg.stages) {
        StageResult r;
        if (stage == "analyze") {
            r = stage_analyze(cfg, field);
        } else if (stage == "verify") {
            r = stage_verify(cfg, field, &cert);
            have_cert = true;
        } else if (stage == "spectrum") {
            if (!have_cert) {
                stage_verify(cfg, field, &cert);
                have_cert = true;
            }
            r = stage_spectrum(cfg, cert);
        } else {
            throw susyq::Error("unknown stage '" + stage + "'");
        }
        combined[stage] = std::move(r.json);
        text += r.text;
        pass = pass && r.pass;
    }
    if (cfg.format == "json")
        emit(cfg, susyq::dump_json_17(combined) + "\n");
    else
        emit(cfg, text);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical certification of extended supersymmetry on spinor lattices"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "built-in field configurations");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "one JSON object per field");
    CommonFlags catalog_flags;
    catalog_flags.add_to(catalog_list);

    auto* analyze = app.add_subcommand("analyze", "parity signatures and predicted N");
    CommonFlags analyze_flags;
    analyze_flags.add_to(analyze);

    auto* verify = app.add_subcommand("verify", "lattice superalgebra certification");
    CommonFlags verify_flags;
    verify_flags.add_to(verify);

    auto* spectrum = app.add_subcommand("spectrum", "spectrum and degeneracy-law check");
    CommonFlags spectrum_flags;
    spectrum_flags.add_to(spectrum);

    auto* run = app.add_subcommand("run", "configured stages in sequence");
    CommonFlags run_flags;
    run_flags.add_to(run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (catalog_list->parsed()) return cmd_catalog_list(catalog_flags.resolve());
        if (analyze->parsed()) {
            RunConfig cfg = analyze_flags.resolve();
            return finish(cfg, stage_analyze(cfg, resolve_field(cfg)));
        }
        if (verify->parsed()) {
            RunConfig cfg = verify_flags.resolve();
            return finish(cfg, stage_verify(cfg, resolve_field(cfg)));
        }
        if (spectrum->parsed()) {
            RunConfig cfg = spectrum_flags.resolve();
            susyq::CertifiedStructure cert;
            stage_verify(cfg, resolve_field(cfg), &cert);
            return finish(cfg, stage_spectrum(cfg, cert));
        }
        if (run->parsed()) return cmd_run(run_flags.resolve());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
