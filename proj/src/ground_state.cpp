#include "chq/ground_state.hpp"

#include "chq/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chq {

std::vector<cplx> default_seed(const SpatialGrid& g) {
    const std::vector<double>& r2 = g.radius2();
    std::vector<cplx> q(g.npoints());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = std::exp(-r2[i]);
    return q;
}

GroundState petviashvili_solve(const NonlinearityContext& ctx, const std::vector<cplx>& seed,
                               double tol, int max_iter, std::uint64_t seed_id) {
    const SpatialGrid& g = ctx.grid();
    const double p = ctx.params().p;
    const double s_exp = (2.0 * p - 1.0) / (2.0 * p - 2.0);

    std::vector<cplx> q = seed;
    double gamma = 0.0;
    int iter = 0;
    double h1_prev = 0.0;
    bool converged = false;

    for (iter = 1; iter <= max_iter; ++iter) {
        // Phase projection: the profile sought is positive, and the modulus
        // map keeps the iterate in the real nonnegative cone.
        for (cplx& z : q)
            z = std::abs(z);

        double m = mass_integral(g, q);
        double a = grad_sq_integral(g, q);
        double h1 = m + a;

        std::vector<cplx> f = ctx.apply_F(q);
        double fq = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i)
            fq += std::real(std::conj(f[i]) * q[i]);
        fq *= g.cell_volume();
        if (!(fq > 0.0))
            throw std::invalid_argument("ground state: degenerate seed, <F(Q),Q> <= 0");

        gamma = h1 / fq;
        double scale = std::pow(gamma, s_exp);

        std::vector<cplx> next = helmholtz_inverse(g, f);
        double diff2 = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i] *= scale;
            diff2 += std::norm(next[i] - q[i]);
        }
        // H1 increment: L2 part above, gradient part via one more transform.
        std::vector<cplx> diff(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            diff[i] = next[i] - q[i];
        double diff_h1 = std::sqrt(diff2 * g.cell_volume() + grad_sq_integral(g, diff));

        q.swap(next);
        h1_prev = std::sqrt(h1);
        if (diff_h1 / h1_prev < tol && std::abs(gamma - 1.0) < tol) {
            converged = true;
            break;
        }
    }

    for (cplx& z : q)
        z = std::abs(z);

    GroundState gs;
    gs.Q = std::move(q);
    gs.grid = ctx.grid_ptr();
    gs.seed_id = seed_id;
    gs.gamma_final = gamma;
    gs.iterations = std::min(iter, max_iter);

    // Equation residual ||Lap Q - Q + F(Q)||_L2 / ||Q||_H1.
    std::vector<cplx> lap = laplacian(g, gs.Q);
    std::vector<cplx> f = ctx.apply_F(gs.Q);
    double res2 = 0.0;
    for (std::size_t i = 0; i < gs.Q.size(); ++i)
        res2 += std::norm(lap[i] - gs.Q[i] + f[i]);
    double m = mass_integral(g, gs.Q);
    double a = grad_sq_integral(g, gs.Q);
    gs.residual = std::sqrt(res2 * g.cell_volume()) / std::sqrt(m + a);

    if (!converged)
        throw std::runtime_error("ground state: no convergence in " +
                                 std::to_string(max_iter) + " iterations (residual " +
                                 std::to_string(gs.residual) + ", gamma " +
                                 std::to_string(gamma) + ")");

    gs.massQ = m;
    gs.gradQ_sq = a;
    gs.potentialQ = ctx.potential_functional(gs.Q);
    gs.energyQ = 0.5 * a - gs.potentialQ / (2.0 * ctx.params().p);

    const DerivedExponents& ex = ctx.exps();
    double norm_q = std::sqrt(m);
    double norm_g = std::sqrt(a);
    gs.C0 = gs.potentialQ / (std::pow(norm_q, ex.A) * std::pow(norm_g, ex.B));
    gs.K_threshold = std::pow(norm_q, 1.0 - ex.s_c) * std::pow(norm_g, ex.s_c);
    gs.ME_threshold = std::pow(m, 1.0 - ex.s_c) * std::pow(gs.energyQ, ex.s_c);
    return gs;
}

StationaryIdentityErrors stationary_identity_errors(const NonlinearityContext& ctx,
                                                    const GroundState& gs) {
    const DerivedExponents& ex = ctx.exps();
    const double p = ctx.params().p;
    StationaryIdentityErrors e;
    e.grad_mass = std::abs(gs.gradQ_sq * ex.A / (ex.B * gs.massQ) - 1.0);
    e.potential_grad = std::abs(gs.potentialQ * ex.B / (2.0 * p * gs.gradQ_sq) - 1.0);
    e.energy_grad = std::abs(gs.energyQ / ((0.5 - 1.0 / ex.B) * gs.gradQ_sq) - 1.0);
    return e;
}

} // namespace chq
