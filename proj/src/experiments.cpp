#include "quarklet/experiments.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quarklet/cascade.hpp"
#include "quarklet/corpus.hpp"
#include "quarklet/regions.hpp"
#include "quarklet/transform.hpp"

namespace quarklet {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    return os;
}

std::string param_label(const SpaceParams& p) {
    std::ostringstream os;
    os << "s" << p.s << "_r" << p.r << "_q" << p.q << "_m" << p.m;
    if (p.u) os << "_u" << *p.u;
    return os.str();
}

ordered_json params_json(const SpaceParams& p) {
    ordered_json j{{"s", p.s}, {"r", p.r}, {"q", p.q}, {"m", p.m}};
    if (p.u) j["u"] = *p.u;
    return j;
}

ordered_json checks_json(const std::vector<InequalityCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back(ordered_json{
            {"inequality", c.text}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"strict", c.strict}, {"satisfied", c.ok}});
    return arr;
}

struct Admissibility {
    bool ok = false;
    std::string region = "none";
    std::vector<InequalityCheck> checks;
};

Admissibility admissibility_of(const SpaceParams& p) {
    Admissibility a;
    if (p.u && *p.u > p.r) {
        MorreyVerdict v = morrey_admissible(p.s, *p.u, p.r, p.q, p.m);
        a.ok = v.admissible;
        a.region = v.admissible ? "morrey" : "none";
        a.checks = v.checks;
    } else {
        RegionVerdict v = classify(p.s, p.r, p.q, p.m);
        a.ok = v.admissible();
        a.region = region_name(v.region);
        a.checks = v.checks;
    }
    return a;
}

void write_json(const std::string& path, const ordered_json& j) {
    auto os = open_out(path);
    os << j.dump(2) << '\n';
}

}  // namespace

void ExperimentConfig::validate() const {
    if (window.hi <= window.lo) throw std::invalid_argument("config: window must have positive width");
    if (grid_level < 4 || grid_level > 24) throw std::invalid_argument("config: grid_level out of range [4, 24]");
    if (max_level > grid_level - 4)
        throw std::invalid_argument("config: max_level needs grid_level >= max_level + 4");
    if (cascade_depth < 1 || cascade_depth > 20) throw std::invalid_argument("config: cascade_depth out of range");
    if (dilations < 1) throw std::invalid_argument("config: dilations must be >= 1");
    if (space_params.empty()) throw std::invalid_argument("config: at least one parameter set required");
    for (const auto& p : space_params) p.validate();
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config " + path);
    ordered_json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("config " + path + " is not valid JSON: " + e.what());
    }
    ExperimentConfig cfg;
    cfg.m = j.value("m", cfg.m);
    cfg.mtilde = j.value("mtilde", cfg.mtilde);
    if (j.contains("window")) {
        cfg.window.lo = j["window"][0].get<int>();
        cfg.window.hi = j["window"][1].get<int>();
    }
    cfg.grid_level = j.value("grid_level", cfg.grid_level);
    if (j.contains("corpus")) cfg.corpus = j["corpus"].get<std::vector<std::string>>();
    cfg.dilations = j.value("dilations", cfg.dilations);
    cfg.cascade_depth = j.value("cascade_depth", cfg.cascade_depth);
    cfg.max_level = j.value("max_level", cfg.max_level);
    cfg.i_max = j.value("i_max", cfg.i_max);
    cfg.calderon_sets = j.value("calderon_sets", cfg.calderon_sets);
    cfg.calderon_set_size = j.value("calderon_set_size", cfg.calderon_set_size);
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("space_params")) {
        cfg.space_params.clear();
        for (const auto& pj : j["space_params"]) {
            SpaceParams p;
            p.s = pj.at("s").get<double>();
            p.r = pj.at("r").get<double>();
            p.q = pj.at("q").get<double>();
            p.m = pj.value("m", cfg.m);
            if (pj.contains("u")) p.u = pj["u"].get<double>();
            cfg.space_params.push_back(p);
        }
    }
    return cfg;
}

CoefficientSet random_coefficient_set(std::mt19937_64& rng, int count, int max_level, int max_p, int m, int mtilde) {
    CoefficientSet c;
    c.meta.m = m;
    c.meta.mtilde = mtilde;
    c.meta.max_level = max_level;
    c.meta.window = {-4, 4};
    std::uniform_int_distribution<int> level(-1, max_level);
    std::uniform_int_distribution<int> degree(0, max_p);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<long long> shift(-4, 3);
    while ((int)c.size() < count) {
        int j = level(rng);
        long long kspan = j <= 0 ? 1 : (1ll << j);
        QuarkletIndex idx{degree(rng), j, shift(rng) * kspan + (long long)(rng() % (unsigned long long)kspan)};
        double v = mag(rng) * (sign(rng) ? 1.0 : -1.0);
        c.set(idx, v);
    }
    return c;
}

CommandResult run_filters(int m, int mtilde, std::ostream& os) {
    FilterPair fp = cdf_filters(m, mtilde);
    write_filter_table(os, fp);
    os << "# discrete biorthogonality residual " << fmt17(discrete_biorthogonality_residual(fp)) << '\n';
    return {0, "filters written"};
}

CommandResult run_decompose(const ExperimentConfig& cfg, const std::string& function, const std::string& out_csv,
                            const std::string& out_json) {
    cfg.validate();
    FilterPair fp = cdf_filters(cfg.m, cfg.mtilde);
    DualBasis dual(fp, cfg.cascade_depth);
    GridFunction f = GridFunction::sampled(make_test_function(function, fp), cfg.window, cfg.grid_level);

    CoefficientSet coeffs = analyze(f, dual, cfg.max_level);
    save_coefficients_csv(out_csv, coeffs);

    ordered_json summary;
    summary["function"] = function;
    summary["m"] = cfg.m;
    summary["mtilde"] = cfg.mtilde;
    summary["max_level"] = cfg.max_level;
    summary["window"] = {cfg.window.lo, cfg.window.hi};
    summary["grid_level"] = cfg.grid_level;
    summary["cascade_depth"] = cfg.cascade_depth;
    summary["coefficients"] = coeffs.size();
    summary["coefficients_csv"] = out_csv;
    summary["roundtrip_error"] = roundtrip_error(f, fp, dual, cfg.max_level);

    ordered_json norms = ordered_json::array();
    bool any_inadmissible = false;
    for (const auto& p : cfg.space_params) {
        Admissibility adm = admissibility_of(p);
        ordered_json entry;
        entry["params"] = params_json(p);
        entry["admissible"] = adm.ok;
        entry["region"] = adm.region;
        if (!adm.ok) any_inadmissible = true;
        entry["seqnorm"] = (p.u && *p.u > p.r) ? seqnorm_morrey(p, coeffs) : seqnorm(p, coeffs);
        norms.push_back(entry);
    }
    summary["norms"] = norms;
    if (any_inadmissible) summary["warning"] = "some parameter sets are outside the admissible regions";
    write_json(out_json, summary);
    return {0, any_inadmissible ? "decomposed (with inadmissible parameter warnings)" : "decomposed"};
}

CommandResult run_synthesize(const ExperimentConfig& cfg, const std::string& coeffs_csv, const std::string& out_csv) {
    cfg.validate();
    FilterPair fp = cdf_filters(cfg.m, cfg.mtilde);
    CoefficientSet coeffs = load_coefficients_csv(coeffs_csv);
    GridFunction g = synthesize(coeffs, fp, cfg.window, cfg.grid_level);
    auto os = open_out(out_csv);
    os << "x,value\n";
    for (long long i = 0; i < g.node_count(); ++i)
        os << fmt17(g.node_x(i)) << ',' << fmt17(g.samples()[size_t(i)]) << '\n';
    return {0, "synthesized " + std::to_string(g.node_count()) + " samples"};
}

CommandResult run_norm(const ExperimentConfig& cfg, const std::string& coeffs_csv, const std::string& function,
                       const std::string& out_json) {
    cfg.validate();
    if (coeffs_csv.empty() == function.empty())
        throw std::invalid_argument("norm command needs exactly one of --coeffs or --function");
    ordered_json out;
    ordered_json entries = ordered_json::array();
    if (!coeffs_csv.empty()) {
        CoefficientSet coeffs = load_coefficients_csv(coeffs_csv);
        if (coeffs.meta.m == 0) coeffs.meta.m = cfg.m;
        out["coefficients_csv"] = coeffs_csv;
        out["coefficients"] = coeffs.size();
        for (const auto& p : cfg.space_params) {
            ordered_json e;
            e["params"] = params_json(p);
            Admissibility adm = admissibility_of(p);
            e["admissible"] = adm.ok;
            e["region"] = adm.region;
            e["seqnorm"] = seqnorm(p, coeffs);
            if (p.u) e["seqnorm_morrey"] = seqnorm_morrey(p, coeffs);
            e["besov_coeff_norm"] = besov_coeff_norm(coeffs, p.s, p.r);
            entries.push_back(e);
        }
    } else {
        FilterPair fp = cdf_filters(cfg.m, cfg.mtilde);
        GridFunction f = GridFunction::sampled(make_test_function(function, fp), cfg.window, cfg.grid_level);
        out["function"] = function;
        for (const auto& p : cfg.space_params) {
            ordered_json e;
            e["params"] = params_json(p);
            Admissibility adm = admissibility_of(p);
            e["admissible"] = adm.ok;
            e["region"] = adm.region;
            e["lr_norm"] = lr_norm(f, p.r);
            e["morrey_norm"] = morrey_norm(f, p.u.value_or(p.r), p.r);
            DifferenceNormConfig dc;
            dc.i_max = cfg.i_max;
            try {
                DifferenceNormResult d = difference_norm_detailed(f, p, dc);
                e["difference_norm"] = d.value;
                e["difference_tail_estimate"] = d.tail_estimate;
                e["difference_order"] = d.order;
                e["difference_w"] = d.w;
                e["difference_i_max"] = d.i_max;
            } catch (const std::invalid_argument& err) {
                e["difference_norm_error"] = err.what();
            }
            entries.push_back(e);
        }
    }
    out["norms"] = entries;
    write_json(out_json, out);
    return {0, "norms written"};
}

CommandResult run_equiv(const ExperimentConfig& cfg) {
    cfg.validate();
    FilterPair fp = cdf_filters(cfg.m, cfg.mtilde);
    DualBasis dual(fp, cfg.cascade_depth);

    std::vector<std::string> names = cfg.corpus.empty() ? builtin_corpus() : cfg.corpus;
    std::vector<std::pair<std::string, GridFunction>> family;
    for (const auto& name : names)
        for (int t = 0; t < cfg.dilations; ++t) {
            std::string spec = name + "@" + std::to_string(t);
            family.emplace_back(spec, GridFunction::sampled(make_test_function(spec, fp), cfg.window, cfg.grid_level));
        }

    DifferenceNormConfig dc;
    dc.i_max = cfg.i_max;

    auto csv = open_out(cfg.out_dir + "/equiv.csv");
    csv << "function,paramset,seqnorm,diffnorm,ratio\n";
    ordered_json summary;
    ordered_json paramsets = ordered_json::array();

    int admissible_count = 0;
    for (const auto& p : cfg.space_params) {
        Admissibility adm = admissibility_of(p);
        ordered_json pj;
        pj["params"] = params_json(p);
        pj["label"] = param_label(p);
        pj["admissible"] = adm.ok;
        pj["region"] = adm.region;
        if (!adm.ok) {
            pj["scored"] = false;
            for (const auto& [name, f] : family) csv << name << ',' << param_label(p) << ",,,\n";
            paramsets.push_back(pj);
            continue;
        }
        ++admissible_count;
        EquivalenceReport report = equivalence_experiment(family, p, dual, cfg.max_level, dc);
        for (const auto& row : report.rows) {
            csv << row.name << ',' << param_label(p) << ',' << fmt17(row.seq) << ',';
            if (std::isnan(row.diff))
                csv << ',';
            else
                csv << fmt17(row.diff) << ',';
            csv << (row.scored ? fmt17(row.ratio) : "") << '\n';
        }
        pj["scored"] = true;
        pj["one_sided"] = report.one_sided;
        if (!report.one_sided) {
            pj["ratio_min"] = report.ratio_min;
            pj["ratio_max"] = report.ratio_max;
            pj["spread"] = report.spread;
            pj["spread_budget"] = report.budget;
            pj["over_budget"] = report.over_budget;
        }
        paramsets.push_back(pj);
    }
    if (admissible_count == 0) throw std::invalid_argument("equiv: every configured parameter set is inadmissible");

    summary["m"] = cfg.m;
    summary["mtilde"] = cfg.mtilde;
    summary["max_level"] = cfg.max_level;
    summary["corpus"] = names;
    summary["dilations"] = cfg.dilations;
    summary["parameter_sets"] = paramsets;
    write_json(cfg.out_dir + "/equiv.json", summary);
    return {0, "equivalence report written to " + cfg.out_dir};
}

CommandResult run_calderon(const ExperimentConfig& cfg) {
    cfg.validate();
    struct EndpointConfig {
        SpaceParams e0, e1;
        double theta;
    };
    const int m = cfg.m;
    std::vector<EndpointConfig> configs = {
        {{0.8, 2.0, 2.0, m, std::nullopt}, {1.6, 2.0, 2.0, m, std::nullopt}, 0.5},
        {{0.5, 1.5, 3.0, m, std::nullopt}, {1.2, 3.0, 1.5, m, std::nullopt}, 0.3},
        {{1.0, 2.0, 1.2, m, std::nullopt}, {0.6, 1.2, 2.5, m, std::nullopt}, 0.7},
        {{0.9, 0.8, 2.0, m, std::nullopt}, {1.4, 2.0, 0.9, m, std::nullopt}, 0.5},
        {{0.7, 2.0, 2.0, m, std::nullopt}, {0.7, 4.0, 1.1, m, std::nullopt}, 0.25},
    };

    std::mt19937_64 rng(cfg.seed);
    auto csv = open_out(cfg.out_dir + "/calderon.csv");
    csv << "config,set,residual,alpha_constant,beta_constant\n";

    ordered_json summary;
    ordered_json per_config = ordered_json::array();
    double worst_residual = 0.0;
    for (size_t ci = 0; ci < configs.size(); ++ci) {
        const auto& ec = configs[ci];
        double cfg_worst = 0.0, amin = 0.0, amax = 0.0, bmin = 0.0, bmax = 0.0;
        bool first = true;
        for (int si = 0; si < cfg.calderon_sets; ++si) {
            CoefficientSet c = random_coefficient_set(rng, cfg.calderon_set_size, 6, 2, m, cfg.mtilde);
            CalderonSplit split = calderon_split(c, ec.e0, ec.e1, ec.theta);
            cfg_worst = std::max(cfg_worst, split.max_factorization_residual);
            if (first) {
                amin = amax = split.alpha_constant;
                bmin = bmax = split.beta_constant;
                first = false;
            } else {
                amin = std::min(amin, split.alpha_constant);
                amax = std::max(amax, split.alpha_constant);
                bmin = std::min(bmin, split.beta_constant);
                bmax = std::max(bmax, split.beta_constant);
            }
            csv << ci << ',' << si << ',' << fmt17(split.max_factorization_residual) << ','
                << fmt17(split.alpha_constant) << ',' << fmt17(split.beta_constant) << '\n';
        }
        worst_residual = std::max(worst_residual, cfg_worst);
        ordered_json cj;
        cj["endpoint0"] = params_json(ec.e0);
        cj["endpoint1"] = params_json(ec.e1);
        cj["theta"] = ec.theta;
        cj["sets"] = cfg.calderon_sets;
        cj["max_residual"] = cfg_worst;
        cj["alpha_constant_range"] = {amin, amax};
        cj["beta_constant_range"] = {bmin, bmax};
        per_config.push_back(cj);
    }
    summary["seed"] = cfg.seed;
    summary["set_size"] = cfg.calderon_set_size;
    summary["max_residual"] = worst_residual;
    summary["configs"] = per_config;
    write_json(cfg.out_dir + "/calderon.json", summary);
    return {0, "calderon report written to " + cfg.out_dir};
}

CommandResult run_regions(const std::string& s, const std::string& r, const std::string& q, int m,
                          const std::optional<std::string>& u, std::ostream& os) {
    ordered_json out;
    bool exact = true;
    try {
        Rational rs = Rational::parse(s), rr = Rational::parse(r), rq = Rational::parse(q);
        RegionVerdict v = classify(rs, rr, rq, m);
        out["exact_arithmetic"] = true;
        out["inputs"] = ordered_json{{"s", rs.to_double()}, {"r", rr.to_double()}, {"q", rq.to_double()}, {"m", m}};
        out["region"] = region_name(v.region);
        out["admissible"] = v.admissible();
        out["checks"] = checks_json(v.checks);
        if (u) {
            Rational ru = Rational::parse(*u);
            MorreyVerdict mv = morrey_admissible(rs, ru, rr, rq, m);
            out["morrey"] =
                ordered_json{{"u", ru.to_double()}, {"admissible", mv.admissible}, {"checks", checks_json(mv.checks)}};
        }
    } catch (const std::overflow_error&) {
        exact = false;
    } catch (const std::invalid_argument& e) {
        // distinguish unparsable literals from genuine precondition errors
        if (std::string(e.what()).find("literal") == std::string::npos) throw;
        exact = false;
    }
    if (!exact) {
        RegionVerdict v = classify(std::stod(s), std::stod(r), std::stod(q), m);
        out["exact_arithmetic"] = false;
        out["inputs"] = ordered_json{{"s", std::stod(s)}, {"r", std::stod(r)}, {"q", std::stod(q)}, {"m", m}};
        out["region"] = region_name(v.region);
        out["admissible"] = v.admissible();
        out["checks"] = checks_json(v.checks);
        if (u) {
            MorreyVerdict mv = morrey_admissible(std::stod(s), std::stod(*u), std::stod(r), std::stod(q), m);
            out["morrey"] =
                ordered_json{{"u", std::stod(*u)}, {"admissible", mv.admissible}, {"checks", checks_json(mv.checks)}};
        }
    }
    os << out.dump(2) << '\n';
    return {0, "region verdict printed"};
}

}  // namespace quarklet
