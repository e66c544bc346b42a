#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quarklet/grid_function.hpp"
#include "quarklet/normest.hpp"
#include "quarklet/seqspace.hpp"

namespace quarklet {

/// Shared configuration of the experiment commands.  Loaded from a JSON file;
/// individual CLI flags override single fields.
struct ExperimentConfig {
    int m = 2;
    int mtilde = 2;
    std::vector<SpaceParams> space_params = {{0.7, 2.0, 2.0, 3, std::nullopt}};
    Window window{-4, 4};
    int grid_level = 12;
    std::vector<std::string> corpus;  // empty = builtin list
    int dilations = 4;                // t = 0 .. dilations-1
    int cascade_depth = 12;
    int max_level = 5;                // J for analysis
    int i_max = -1;                   // -1 = grid_level - 4
    int calderon_sets = 100;
    int calderon_set_size = 30;
    std::string out_dir = ".";
    std::uint64_t seed = 20250809;

    void validate() const;
};

ExperimentConfig load_config(const std::string& path);

/// Seeded random coefficient set: `count` distinct indices with levels in
/// [-1, max_level], degrees in [0, max_p], shifts covering the level-0 window,
/// values uniform in [-1, -0.1] u [0.1, 1].
CoefficientSet random_coefficient_set(std::mt19937_64& rng, int count, int max_level, int max_p, int m, int mtilde);

struct CommandResult {
    int exit_code = 0;
    std::string message;
};

/// `filters`: emit the mask table and the discrete perfect-reconstruction
/// residual.
CommandResult run_filters(int m, int mtilde, std::ostream& os);

/// `decompose`: analyze a corpus function, write the coefficient CSV and a
/// JSON summary (one sequence norm per configured parameter set, roundtrip
/// error, admissibility flags).
CommandResult run_decompose(const ExperimentConfig& cfg, const std::string& function, const std::string& out_csv,
                            const std::string& out_json);

/// `synthesize`: read a coefficient CSV, sample the quarklet sum on the
/// configured grid, write "x,value" CSV.
CommandResult run_synthesize(const ExperimentConfig& cfg, const std::string& coeffs_csv, const std::string& out_csv);

/// `norm`: norms of either a coefficient CSV or a corpus function, as JSON.
CommandResult run_norm(const ExperimentConfig& cfg, const std::string& coeffs_csv, const std::string& function,
                       const std::string& out_json);

/// `equiv`: norm-equivalence experiment over corpus x parameter grid.
/// Writes <out>/equiv.csv and <out>/equiv.json.  Fails (exit 2) when every
/// parameter set is inadmissible.
CommandResult run_equiv(const ExperimentConfig& cfg);

/// `calderon`: randomized Calderon-product splitting suite.  Writes
/// <out>/calderon.csv and <out>/calderon.json.
CommandResult run_calderon(const ExperimentConfig& cfg);

/// `regions`: JSON verdict for one parameter tuple, with every inequality.
/// Inputs are strings so that decimal literals can be compared exactly.
CommandResult run_regions(const std::string& s, const std::string& r, const std::string& q, int m,
                          const std::optional<std::string>& u, std::ostream& os);

}  // namespace quarklet
