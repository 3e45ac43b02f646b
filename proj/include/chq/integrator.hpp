#pragma once

#include "chq/morawetz.hpp"
#include "chq/nonlinearity.hpp"

#include <string>
#include <utility>

namespace chq {

struct EvolveConfig {
    double dt = 1e-3;
    double T = 1.0;
    int diag_stride = 10; ///< steps between diagnostic records
    std::vector<double> snapshot_times;
    bool filter_on = false; ///< optional exponential spectral corner filter

    /// Early-stop heuristics. The gradient factor is a flag threshold, not a
    /// claim about the continuum solution; on periodic grids the reachable
    /// growth is capped by the resolution (||grad u|| <= k_max ||u||), so
    /// runs hunting a blow-up signature lower this below that cap.
    double blowup_growth_factor = 1e3;
    /// The boundary-mass indicator always goes into the records; stopping on
    /// it is opt-in because dispersing solutions legitimately reach the
    /// boundary and keep carrying useful diagnostics afterwards.
    bool stop_on_truncation = false;
    double truncation_frac = 1e-6; ///< flag when bdry mass > frac * M(u0)

    bool nonlinearity_off = false; ///< test hook: pure free propagation
};

struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double energy_2p = 0.0; ///< 1/2 |grad u|^2 - P/(2p), the conserved form
    double energy_p = 0.0;  ///< 1/2 |grad u|^2 - P/p, recorded for contrast
    double grad_l2 = 0.0;   ///< ||grad u||
    double hsc_norm = 0.0;  ///< homogeneous Sobolev seminorm at s = s_c
    double potential_P = 0.0;
    double local_mass = 0.0;
    double morawetz_action = 0.0;
    double kinetic_threshold_ratio = 0.0;
    double boundary_mass = 0.0;
    // In-memory extras (not part of the CSV schema):
    double ball_ratio = 1.0; ///< localized coercivity quotient
    double local_q = 0.0;    ///< integral of |u|^q over the detector ball
};

/// Optional per-record monitors wired into evolve. Null/zero entries switch
/// the corresponding diagnostic column to 0.
struct RunMonitors {
    const MorawetzWeight* weight = nullptr;      ///< for morawetz_action
    const std::vector<double>* cutoff = nullptr; ///< chi for ball_ratio
    double k_threshold = 0.0;                    ///< kinetic-ratio denominator
    double detector_radius = 0.0;                ///< local-mass / local-q ball
    double q_exponent = 6.0;                     ///< 2N/(N-2) at N = 3
};

struct TrajectoryReport {
    std::vector<DiagnosticsRecord> records;
    /// Retained states at the requested snapshot times (rounded to steps).
    std::vector<std::pair<double, std::vector<cplx>>> snapshots;
    std::string verdict = "undecided";
    bool truncation_flagged = false;
    bool gradient_stop = false;
    bool nonfinite_stop = false;
    double stop_time = 0.0;
    int steps_taken = 0;
    std::vector<cplx> final_state;
    double final_time = 0.0;
};

/// One Strang step: half kinetic, exact nonlinear phase rotation, half
/// kinetic. The nonlinear substep is exact because the phase rate
/// W = V w_b |u|^{p-2} depends on |u| only, which the rotation preserves —
/// so both substeps conserve mass to roundoff.
std::vector<cplx> strang_step(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                              double dt);

/// March u0 for round(T/dt) steps, recording diagnostics every diag_stride
/// steps (plus the first and last). Uses the merged-half-step form of the
/// splitting internally (one kinetic multiply per step), reconstructing the
/// exact unsplit state at every diagnostic and snapshot time.
TrajectoryReport evolve(const NonlinearityContext& ctx, const std::vector<cplx>& u0,
                        const EvolveConfig& cfg, const RunMonitors* mon = nullptr);

} // namespace chq
