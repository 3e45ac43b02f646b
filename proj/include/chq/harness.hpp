#pragma once

#include "chq/detectors.hpp"
#include "chq/io.hpp"

#include <iosfwd>
#include <optional>

namespace chq {

/// A raw config materialized into typed pieces with every default filled in.
struct RunSetup {
    ModelParams model;
    int grid_M = 128;
    double grid_L = 24.0;

    std::string init_kind = "qmult"; ///< qmult | gaussian | snapshot
    double init_c = 1.0;
    double init_amplitude = 1.0;
    double init_width = 1.0;
    double init_center[3] = {0.0, 0.0, 0.0};
    double init_momentum[3] = {0.0, 0.0, 0.0};
    std::string init_snapshot;
    std::string q_snapshot;

    EvolveConfig evolve;
    bool rerun_dt_halved = false;

    double detect_radius = 0.0;     ///< defaults to L/16
    double coercivity_radius = 0.0; ///< defaults to L/4
    double eps_local_frac = 1e-3;
    double eps_scat_frac = 1e-3;
    double morawetz_R = 0.0; ///< defaults to 0.2 L

    double gs_tol = 1e-10;
    int gs_max_iter = 2000;
    double gs_seed_width = 0.70710678118654752; ///< exp(-|x|^2) seed
    double gs_seed_amplitude = 1.0;

    std::vector<double> scan_amplitudes;
    std::string out_dir = "out";
    std::uint64_t seed = 1;

    ConfigMap resolved; ///< every default materialized, for the echo file
};

/// Validate keys, apply defaults, and type-check a parsed config.
/// Throws ConfigError on unknown keys or malformed values.
RunSetup materialize_config(const ConfigMap& raw);

/// Subcommands. Each returns the process exit code: 0 success,
/// 1 domain failure (invalid model, non-convergence, failed identity),
/// 2 usage/config error (handled by the caller via ConfigError).
int cmd_validate(const RunSetup& rs, std::ostream& out);
int cmd_ground_state(const RunSetup& rs, std::ostream& out);
int cmd_evolve(const RunSetup& rs, std::ostream& out);
int cmd_verify(const RunSetup& rs, std::ostream& out);
int cmd_scan(const RunSetup& rs, std::ostream& out);

/// One row of the verification report.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct IdentitySuiteConfig {
    ModelParams model;                 ///< defaults to the reference set
    int small_M = 16;                  ///< pairwise-friendly grid
    int medium_M = 24;                 ///< refinement comparison grid
    double box_L = 16.0;
    std::uint64_t seed = 1;
    bool include_medium_pairwise = true;
};

/// The cross-check suite: transform/Parseval checks, convolution oracles,
/// conservation (both energy bookkeepings), the action-derivative identities
/// in both assemblies, the pairwise-vs-transform cross-check, and the cutoff
/// localization identity. Pure library calls; no file output.
std::vector<CheckResult> run_identity_suite(const IdentitySuiteConfig& cfg);

/// Full command-line entry point (argument parsing + dispatch).
int run_cli(int argc, char** argv);

/// Helpers shared by commands and tests.
std::vector<cplx> build_initial_data(const RunSetup& rs, const NonlinearityContext& ctx,
                                     const std::optional<GroundState>& gs);
std::optional<GroundState> load_ground_state(const RunSetup& rs,
                                             const NonlinearityContext& ctx);

} // namespace chq
