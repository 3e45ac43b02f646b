#include "chq/detectors.hpp"

#include "chq/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chq {

const char* to_string(ThresholdClass c) {
    switch (c) {
    case ThresholdClass::sub_threshold: return "sub-threshold";
    case ThresholdClass::above_kinetic: return "above-kinetic";
    case ThresholdClass::above_energy: return "above-energy";
    case ThresholdClass::outside_hypotheses: return "outside-hypotheses";
    }
    return "?";
}

ThresholdClass threshold_classify(const NonlinearityContext& ctx, const std::vector<cplx>& u0,
                                  const GroundState& gs, std::string* explain) {
    const SpatialGrid& g = ctx.grid();
    const DerivedExponents& ex = ctx.exps();
    const double band = 1e-5; // boundary indistinguishability band

    double m = mass_integral(g, u0);
    if (m == 0.0) {
        if (explain)
            *explain = "zero field: trivially below both thresholds";
        return ThresholdClass::sub_threshold;
    }
    double grad = sobolev_seminorm(g, u0, 1.0);
    double e = ctx.energy(u0);
    double k_ratio = std::pow(std::sqrt(m), 1.0 - ex.s_c) * std::pow(grad, ex.s_c) /
                     gs.K_threshold;

    std::ostringstream os;
    if (e <= 0.0) {
        // The mass-energy product has no real s_c-th power here; nonpositive
        // energy sits below the positive threshold, so only the kinetic side
        // decides, and a sub-threshold kinetic norm with E <= 0 is outside
        // the regime the comparison describes.
        os << "E(u0) = " << e << " <= 0 (mass-energy power undefined), kinetic ratio "
           << k_ratio;
        if (explain)
            *explain = os.str();
        return (k_ratio >= 1.0 + band) ? ThresholdClass::above_kinetic
                                       : ThresholdClass::outside_hypotheses;
    }

    double me_ratio = std::pow(m, 1.0 - ex.s_c) * std::pow(e, ex.s_c) / gs.ME_threshold;
    os << "mass-energy ratio " << me_ratio << ", kinetic ratio " << k_ratio;
    if (explain)
        *explain = os.str();

    if (me_ratio >= 1.0 + band)
        return ThresholdClass::above_energy;
    if (me_ratio > 1.0 - band)
        return ThresholdClass::outside_hypotheses;
    if (k_ratio >= 1.0 + band)
        return ThresholdClass::above_kinetic;
    if (k_ratio > 1.0 - band)
        return ThresholdClass::outside_hypotheses;
    return ThresholdClass::sub_threshold;
}

double local_mass(const SpatialGrid& g, const std::vector<cplx>& u, double R) {
    if (!(R > 0.0) || !(R < 0.5 * g.box()))
        throw std::invalid_argument("local_mass: need 0 < R < L/2");
    return ball_mass(g, u, R);
}

std::vector<double> pullback_cauchy(
    const SpatialGrid& g, const std::vector<std::pair<double, std::vector<cplx>>>& snapshots) {
    if (snapshots.size() < 3)
        throw std::invalid_argument("pullback: need at least 3 snapshots");
    std::vector<double> d;
    std::vector<cplx> prev, cur;
    for (std::size_t n = 0; n < snapshots.size(); ++n) {
        cur = snapshots[n].second;
        free_propagate(g, cur, -snapshots[n].first);
        if (n > 0) {
            std::vector<cplx> diff(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                diff[i] = cur[i] - prev[i];
            double l2 = mass_integral(g, diff);
            double gr = grad_sq_integral(g, diff);
            d.push_back(std::sqrt(l2 + gr));
        }
        prev.swap(cur);
    }
    return d;
}

double ball_coercivity_ratio(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                             const std::vector<double>& cutoff) {
    const SpatialGrid& g = ctx.grid();
    std::vector<cplx> cu(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        cu[i] = cutoff[i] * u[i];
    double a = grad_sq_integral(g, cu);
    if (a == 0.0)
        return 1.0; // empty ball: coercivity holds vacuously
    double pp = ctx.potential_functional(cu);
    double bb = ctx.exps().B / (2.0 * ctx.params().p);
    return (a - bb * pp) / a;
}

std::pair<double, double> coercivity_monitor(const NonlinearityContext& ctx,
                                             const std::vector<cplx>& u, const GroundState& gs,
                                             const std::vector<double>& cutoff) {
    const SpatialGrid& g = ctx.grid();
    const DerivedExponents& ex = ctx.exps();
    double m = mass_integral(g, u);
    double kin = 0.0;
    if (m > 0.0) {
        double grad = sobolev_seminorm(g, u, 1.0);
        kin = std::pow(std::sqrt(m), 1.0 - ex.s_c) * std::pow(grad, ex.s_c) / gs.K_threshold;
    }
    return {kin, ball_coercivity_ratio(ctx, u, cutoff)};
}

Verdict classify(const TrajectoryReport& run, const std::vector<const TrajectoryReport*>& reruns,
                 const SpatialGrid& g, const DetectorConfig& dc) {
    Verdict v;
    if (run.records.empty())
        return v;
    const double m0 = run.records.front().mass;

    if (run.verdict == "domain-truncation") {
        v.label = "domain-truncation";
        v.evidence.emplace_back("boundary mass at stop", run.records.back().boundary_mass,
                                m0 * 1e-6);
        return v;
    }

    if (run.gradient_stop || run.nonfinite_stop) {
        v.evidence.emplace_back("gradient growth stop time", run.stop_time, 0.0);
        bool consistent = !reruns.empty();
        for (const TrajectoryReport* rr : reruns) {
            bool fired = rr->gradient_stop || rr->nonfinite_stop;
            v.evidence.emplace_back("rerun stop time", fired ? rr->stop_time : -1.0, 0.0);
            consistent = consistent && fired;
        }
        v.refinement_consistent = consistent;
        v.label = consistent ? "blowup-suspected" : "undecided";
        return v;
    }

    // Scattering proxy: localized mass drained, pullback settled, kinetic
    // norm below threshold the whole way.
    bool have_kinetic = false;
    double max_kin = 0.0;
    for (const DiagnosticsRecord& r : run.records) {
        if (r.kinetic_threshold_ratio > 0.0)
            have_kinetic = true;
        max_kin = std::max(max_kin, r.kinetic_threshold_ratio);
    }
    double final_local = run.records.back().local_mass;
    double eps_local = dc.eps_local_frac * m0;
    bool local_ok = dc.detector_radius > 0.0 && final_local < eps_local;
    v.evidence.emplace_back("final local mass", final_local, eps_local);

    bool pullback_ok = false;
    if (run.snapshots.size() >= 3) {
        std::vector<double> d = pullback_cauchy(g, run.snapshots);
        double eps_scat = dc.eps_scat_frac * m0;
        pullback_ok = d.back() < eps_scat && d.back() <= d.front();
        v.evidence.emplace_back("final pullback increment", d.back(), eps_scat);
        v.evidence.emplace_back("first pullback increment", d.front(), 0.0);
    } else {
        v.evidence.emplace_back("pullback snapshots", static_cast<double>(run.snapshots.size()),
                                3.0);
    }

    bool kinetic_ok = have_kinetic && max_kin < 1.0;
    v.evidence.emplace_back("max kinetic threshold ratio", max_kin, 1.0);

    if (local_ok && pullback_ok && kinetic_ok)
        v.label = "scattering-proxy";
    return v;
}

} // namespace chq
