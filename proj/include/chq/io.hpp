#pragma once

#include "chq/grid.hpp"
#include "chq/ground_state.hpp"
#include "chq/integrator.hpp"
#include "chq/model.hpp"

#include <map>
#include <string>

namespace chq {

/// Format a double with full round-trip precision ("%.17g"); every file
/// writer funnels through this so reruns are byte-identical.
std::string format_double(double v);

/// Field snapshot, little-endian binary:
/// magic "CHQS" | version u32 | N u32 | M u32 | L f64 | t f64 |
/// alpha f64 | b f64 | p f64 | M^N interleaved (re, im) f64, row-major.
struct SnapshotData {
    int dim = 0;
    int points_per_axis = 0;
    double box = 0.0;
    double t = 0.0;
    double alpha = 0.0, b = 0.0, p = 0.0;
    std::vector<cplx> field;
};

void write_snapshot(const std::string& path, const SpatialGrid& g, const ModelParams& mp,
                    double t, const std::vector<cplx>& field);
SnapshotData read_snapshot(const std::string& path);

/// Diagnostics CSV, schema v1: t, mass, energy_2p, energy_p, grad_l2,
/// hsc_norm, potential_P, local_mass, morawetz_action,
/// kinetic_threshold_ratio, boundary_mass.
void write_diagnostics_csv(const std::string& path, const TrajectoryReport& rep);

/// Threshold table CSV: N, alpha, b, p, s_c, A, B, massQ, gradQ_sq, energyQ,
/// C0, ME_threshold, K_threshold, residual, grid_M, box_L, seed_id.
void write_threshold_csv(const std::string& path, const ModelParams& mp,
                         const DerivedExponents& ex, const GroundState& gs);

/// Flat "key = value" configuration ('#' starts a comment). Parse errors
/// throw ConfigError carrying the offending line number.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

/// Typed lookups; the getters with a default never throw on a missing key
/// but do throw ConfigError on a malformed value.
double config_double(const ConfigMap& c, const std::string& key, double fallback);
long long config_int(const ConfigMap& c, const std::string& key, long long fallback);
bool config_bool(const ConfigMap& c, const std::string& key, bool fallback);
std::string config_string(const ConfigMap& c, const std::string& key,
                          const std::string& fallback);
/// Comma-separated list of reals (empty string -> empty list).
std::vector<double> config_double_list(const ConfigMap& c, const std::string& key);

/// Throw ConfigError if the map holds a key outside the known set.
void reject_unknown_keys(const ConfigMap& c, const std::vector<std::string>& known);

/// Write the fully resolved configuration (sorted keys) next to run outputs.
void write_resolved_config(const std::string& path, const ConfigMap& c);

} // namespace chq
