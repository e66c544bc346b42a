#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quarklet/experiments.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

quarklet::ExperimentConfig make_config(const std::string& config_path, std::optional<std::uint64_t> seed,
                                       std::optional<std::string> out_dir) {
    quarklet::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = quarklet::load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quarklet system: biorthogonal B-spline quarklets, sequence-space quasi-norms and "
                 "norm-equivalence experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // let --config/--seed/--out appear after the subcommand

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "override the random seed");
    app.add_option("--out", out_dir, "override the output directory");

    auto* cmd_filters = app.add_subcommand("filters", "print a CDF filter table");
    int fm = 2, fmt = 2;
    std::string filters_out;
    cmd_filters->add_option("m", fm, "primal spline order")->required();
    cmd_filters->add_option("mtilde", fmt, "dual order")->required();
    cmd_filters->add_option("--table", filters_out, "write the table to a file instead of stdout");

    auto* cmd_decompose = app.add_subcommand("decompose", "analyze a corpus function into quarklet coefficients");
    std::string dec_function = "bump", dec_csv, dec_json;
    cmd_decompose->add_option("function", dec_function, "corpus function, e.g. bump, bspline:3, psi, sawtooth");
    cmd_decompose->add_option("--csv", dec_csv, "coefficient CSV path (default <out>/coeffs.csv)");
    cmd_decompose->add_option("--json", dec_json, "summary JSON path (default <out>/decompose.json)");

    auto* cmd_synth = app.add_subcommand("synthesize", "sample a quarklet sum from a coefficient CSV");
    std::string syn_coeffs, syn_out;
    cmd_synth->add_option("coeffs", syn_coeffs, "coefficient CSV")->required()->check(CLI::ExistingFile);
    cmd_synth->add_option("--csv", syn_out, "output sample CSV (default <out>/synthesis.csv)");

    auto* cmd_norm = app.add_subcommand("norm", "sequence-space or function-space norms");
    std::string norm_coeffs, norm_function, norm_json;
    cmd_norm->add_option("--coeffs", norm_coeffs, "coefficient CSV")->check(CLI::ExistingFile);
    cmd_norm->add_option("--function", norm_function, "corpus function");
    cmd_norm->add_option("--json", norm_json, "output JSON (default <out>/norm.json)");

    auto* cmd_equiv = app.add_subcommand("equiv", "norm-equivalence experiment over the corpus");
    auto* cmd_calderon = app.add_subcommand("calderon", "randomized Calderon-product splitting suite");

    auto* cmd_regions = app.add_subcommand("regions", "classify parameters against the admissibility regions");
    std::string rs, rr, rq, ru;
    int rm = 2;
    cmd_regions->add_option("s", rs, "smoothness")->required();
    cmd_regions->add_option("r", rr, "integrability")->required();
    cmd_regions->add_option("q", rq, "fine index")->required();
    cmd_regions->add_option("m", rm, "spline order")->required();
    cmd_regions->add_option("--morrey-u", ru, "also check Morrey admissibility for this u");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        quarklet::CommandResult result;
        if (*cmd_filters) {
            if (filters_out.empty()) {
                result = quarklet::run_filters(fm, fmt, std::cout);
            } else {
                std::ofstream os(filters_out);
                if (!os) throw std::runtime_error("cannot open " + filters_out + " for writing");
                result = quarklet::run_filters(fm, fmt, os);
            }
        } else if (*cmd_decompose) {
            auto cfg = make_config(config_path, seed, out_dir);
            if (dec_csv.empty()) dec_csv = cfg.out_dir + "/coeffs.csv";
            if (dec_json.empty()) dec_json = cfg.out_dir + "/decompose.json";
            result = quarklet::run_decompose(cfg, dec_function, dec_csv, dec_json);
        } else if (*cmd_synth) {
            auto cfg = make_config(config_path, seed, out_dir);
            if (syn_out.empty()) syn_out = cfg.out_dir + "/synthesis.csv";
            result = quarklet::run_synthesize(cfg, syn_coeffs, syn_out);
        } else if (*cmd_norm) {
            auto cfg = make_config(config_path, seed, out_dir);
            if (norm_json.empty()) norm_json = cfg.out_dir + "/norm.json";
            result = quarklet::run_norm(cfg, norm_coeffs, norm_function, norm_json);
        } else if (*cmd_equiv) {
            result = quarklet::run_equiv(make_config(config_path, seed, out_dir));
        } else if (*cmd_calderon) {
            result = quarklet::run_calderon(make_config(config_path, seed, out_dir));
        } else if (*cmd_regions) {
            result = quarklet::run_regions(rs, rr, rq, rm, ru.empty() ? std::nullopt : std::make_optional(ru),
                                           std::cout);
        }
        if (!result.message.empty()) std::cerr << result.message << '\n';
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
