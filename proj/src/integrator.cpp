#include "chq/integrator.hpp"

#include "chq/detectors.hpp"
#include "chq/fft.hpp"
#include "chq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace chq {
namespace {

// Spectral kinetic substep exp(i tau Lap), optionally composed with the
// corner filter exp(-36 (|k|/|k|_corner)^36) (touches only modes within a
// few percent of the lattice corner).
void kinetic_multiply(const SpatialGrid& g, std::vector<cplx>& v, double tau, bool filter) {
    fft_forward(g, v, v);
    const std::vector<double>& k2 = g.wave2();
    double corner2 = g.max_wavenumber() * g.max_wavenumber() * g.dim();
    for (std::size_t i = 0; i < v.size(); ++i) {
        double ph = -k2[i] * tau;
        cplx m(std::cos(ph), std::sin(ph));
        if (filter && k2[i] > 0.0) {
            double s = k2[i] / corner2; // (|k|/corner)^2
            m *= std::exp(-36.0 * std::pow(s, 18.0));
        }
        v[i] *= m;
    }
    fft_inverse(g, v, v);
}

// Exact nonlinear substep u <- exp(i dt W) u. Returns false if W or u has
// gone non-finite (overflow signal, handled by the caller).
bool phase_kick(const NonlinearityContext& ctx, std::vector<cplx>& u, double dt) {
    std::vector<double> w = ctx.local_multiplier(u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(w[i]))
            return false;
        double ph = dt * w[i];
        u[i] *= cplx(std::cos(ph), std::sin(ph));
    }
    return true;
}

struct DiagContext {
    const NonlinearityContext& ctx;
    const RunMonitors* mon;
};

DiagnosticsRecord make_record(const DiagContext& dc, double t, const std::vector<cplx>& u) {
    const SpatialGrid& g = dc.ctx.grid();
    const ModelParams& mp = dc.ctx.params();
    const DerivedExponents& ex = dc.ctx.exps();

    DiagnosticsRecord r;
    r.t = t;
    r.mass = mass_integral(g, u);
    r.grad_l2 = sobolev_seminorm(g, u, 1.0);
    r.hsc_norm = sobolev_seminorm(g, u, ex.s_c);
    r.potential_P = dc.ctx.potential_functional(u);
    double kin = 0.5 * r.grad_l2 * r.grad_l2;
    r.energy_2p = kin - r.potential_P / (2.0 * mp.p);
    r.energy_p = kin - r.potential_P / mp.p;
    r.boundary_mass = boundary_mass(g, u);

    if (dc.mon) {
        if (dc.mon->detector_radius > 0.0) {
            r.local_mass = ball_mass(g, u, dc.mon->detector_radius);
            r.local_q = ball_power_integral(g, u, dc.mon->detector_radius, dc.mon->q_exponent);
        }
        if (dc.mon->k_threshold > 0.0 && r.mass > 0.0)
            r.kinetic_threshold_ratio = std::pow(std::sqrt(r.mass), 1.0 - ex.s_c) *
                                        std::pow(r.grad_l2, ex.s_c) / dc.mon->k_threshold;
        if (dc.mon->weight)
            r.morawetz_action = morawetz_action(g, u, *dc.mon->weight);
        if (dc.mon->cutoff)
            r.ball_ratio = ball_coercivity_ratio(dc.ctx, u, *dc.mon->cutoff);
    }
    return r;
}

} // namespace

std::vector<cplx> strang_step(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                              double dt) {
    std::vector<cplx> v = u;
    kinetic_multiply(ctx.grid(), v, 0.5 * dt, false);
    if (!phase_kick(ctx, v, dt))
        throw std::runtime_error("strang_step: non-finite values");
    kinetic_multiply(ctx.grid(), v, 0.5 * dt, false);
    return v;
}

TrajectoryReport evolve(const NonlinearityContext& ctx, const std::vector<cplx>& u0,
                        const EvolveConfig& cfg, const RunMonitors* mon) {
    if (!(cfg.dt > 0.0) || !(cfg.T > 0.0) || cfg.diag_stride < 1)
        throw std::invalid_argument("evolve: need dt > 0, T > 0, diag_stride >= 1");
    const SpatialGrid& g = ctx.grid();

    const long long nsteps = std::llround(cfg.T / cfg.dt);
    std::map<long long, double> snap_steps; // step index -> nominal time
    for (double ts : cfg.snapshot_times) {
        long long s = std::clamp<long long>(std::llround(ts / cfg.dt), 0, nsteps);
        snap_steps.emplace(s, s * cfg.dt);
    }

    DiagContext dc{ctx, mon};
    TrajectoryReport rep;

    std::vector<cplx> u = u0;
    DiagnosticsRecord first = make_record(dc, 0.0, u);
    const double mass0 = first.mass;
    const double grad0 = first.grad_l2;
    rep.records.push_back(first);
    if (snap_steps.count(0))
        rep.snapshots.emplace_back(0.0, u);

    if (nsteps == 0) {
        rep.final_state = std::move(u);
        rep.final_time = 0.0;
        return rep;
    }

    // Merged-half-step marching: y_n = exp(i dt/2 Lap) u_n, so one full
    // kinetic multiply per step instead of two, and u_n is recovered exactly
    // (same arithmetic as the unsplit composition) wherever it is needed.
    std::vector<cplx> y = u;
    kinetic_multiply(g, y, 0.5 * cfg.dt, false);

    bool stopped = false;
    double u_time = 0.0; // time of the state currently held in u
    long long n = 0;
    while (n < nsteps) {
        ++n;
        double t = n * cfg.dt;

        if (!cfg.nonlinearity_off && !phase_kick(ctx, y, cfg.dt)) {
            rep.nonfinite_stop = true;
            rep.verdict = "blowup-suspected";
            rep.stop_time = t - cfg.dt;
            stopped = true;
            --n;
            break;
        }

        bool last = (n == nsteps);
        bool diag = last || (n % cfg.diag_stride == 0);
        bool snap = snap_steps.count(n) > 0;

        if (diag || snap) {
            u = y;
            kinetic_multiply(g, u, 0.5 * cfg.dt, false);
            u_time = t;
            if (snap)
                rep.snapshots.emplace_back(t, u);
            if (diag) {
                DiagnosticsRecord r = make_record(dc, t, u);
                rep.records.push_back(r);

                if (!std::isfinite(r.mass) || !std::isfinite(r.grad_l2)) {
                    rep.nonfinite_stop = true;
                    rep.verdict = "blowup-suspected";
                    rep.stop_time = t;
                    stopped = true;
                    break;
                }
                if (grad0 > 0.0 && r.grad_l2 > cfg.blowup_growth_factor * grad0) {
                    rep.gradient_stop = true;
                    rep.verdict = "blowup-suspected";
                    rep.stop_time = t;
                    stopped = true;
                    break;
                }
                if (r.boundary_mass > cfg.truncation_frac * mass0) {
                    rep.truncation_flagged = true;
                    if (cfg.stop_on_truncation) {
                        rep.verdict = "domain-truncation";
                        rep.stop_time = t;
                        stopped = true;
                        break;
                    }
                }
            }
        }
        if (!last)
            kinetic_multiply(g, y, cfg.dt, cfg.filter_on);
    }

    rep.steps_taken = static_cast<int>(n);
    // On a normal finish the last step refreshed u; on an early stop u holds
    // the most recent reconstructed state, which is what gets reported.
    rep.final_state = std::move(u);
    rep.final_time = u_time;
    return rep;
}

} // namespace chq
