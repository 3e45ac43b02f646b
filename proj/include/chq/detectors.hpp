#pragma once

#include "chq/ground_state.hpp"
#include "chq/integrator.hpp"

#include <string>
#include <tuple>

namespace chq {

enum class ThresholdClass {
    sub_threshold,      ///< both mass-energy and kinetic quantities strictly below
    above_kinetic,      ///< mass-energy below but kinetic norm at/above threshold
    above_energy,       ///< mass-energy product at/above threshold
    outside_hypotheses, ///< negative energy or boundary case: comparison undefined
};

const char* to_string(ThresholdClass c);

/// Compare M(u0)^(1-s_c) E(u0)^(s_c) and ||u0||^(1-s_c) ||grad u0||^(s_c)
/// against the ground-state thresholds. Negative energy (the s_c-power is
/// then undefined) and data within 1e-5 of the boundary are classified
/// outside_hypotheses; optional explain receives the measured ratios.
ThresholdClass threshold_classify(const NonlinearityContext& ctx, const std::vector<cplx>& u0,
                                  const GroundState& gs, std::string* explain = nullptr);

/// integral of |u|^2 over |x| <= R (requires R < L/2).
double local_mass(const SpatialGrid& g, const std::vector<cplx>& u, double R);

/// Cauchy increments of the free pullback: v(t) = free_propagate(u(t), -t),
/// d_n = ||v(t_{n+1}) - v(t_n)||_{H1}. Identically zero (to roundoff) along
/// a free trajectory; decaying increments witness an emerging free profile.
std::vector<double> pullback_cauchy(
    const SpatialGrid& g, const std::vector<std::pair<double, std::vector<cplx>>>& snapshots);

/// Localized coercivity quotient
///   [int |grad(chi u)|^2 - (B/2p) P(chi u)] / int |grad(chi u)|^2,
/// defined as 1 when chi*u vanishes.
double ball_coercivity_ratio(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                             const std::vector<double>& cutoff);

/// kinetic_ratio = ||u||^(1-s_c) ||grad u||^(s_c) / K_threshold, and the
/// ball_coercivity_ratio above, as a pair (0 and 1 for u = 0).
std::pair<double, double> coercivity_monitor(const NonlinearityContext& ctx,
                                             const std::vector<cplx>& u, const GroundState& gs,
                                             const std::vector<double>& cutoff);

struct DetectorConfig {
    double detector_radius = 0.0;
    double eps_local_frac = 1e-3; ///< local-mass pass level, fraction of M(u0)
    double eps_scat_frac = 1e-3;  ///< pullback pass level, fraction of M(u0)
};

struct Verdict {
    std::string label = "undecided"; ///< scattering-proxy | blowup-suspected |
                                     ///< undecided | domain-truncation
    /// (criterion, measured value, threshold) rows backing the label.
    std::vector<std::tuple<std::string, double, double>> evidence;
    bool refinement_consistent = false;
};

/// Aggregate a completed run (and optional refined-dt reruns) into a verdict:
///  - scattering-proxy: final local mass below eps_local_frac * M(u0), the
///    pullback increments ending below eps_scat_frac * M(u0) and below their
///    first value, and kinetic ratio < 1 at every record;
///  - blowup-suspected: the gradient-growth (or overflow) stop fired, and
///    fired in every supplied rerun too (refinement consistency — without a
///    rerun the label stays undecided);
///  - domain-truncation: the run was stopped by the boundary-mass guard.
Verdict classify(const TrajectoryReport& run, const std::vector<const TrajectoryReport*>& reruns,
                 const SpatialGrid& g, const DetectorConfig& dc);

} // namespace chq
