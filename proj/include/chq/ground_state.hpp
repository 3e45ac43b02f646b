#pragma once

#include "chq/nonlinearity.hpp"

#include <cstdint>

namespace chq {

/// Converged stationary profile Q (positive, localized, real up to roundoff)
/// of Lap(Q) - Q + F(Q) = 0, together with its functionals, the sharp
/// interpolation constant, and the two threshold numbers used to classify
/// initial data.
struct GroundState {
    std::vector<cplx> Q;
    GridPtr grid;

    double massQ = 0.0;    ///< integral |Q|^2
    double gradQ_sq = 0.0; ///< integral |grad Q|^2
    double potentialQ = 0.0;
    double energyQ = 0.0;

    double C0 = 0.0;           ///< P(Q) / (||Q||^A ||grad Q||^B)
    double ME_threshold = 0.0; ///< M(Q)^(1-s_c) E(Q)^(s_c)
    double K_threshold = 0.0;  ///< ||Q||^(1-s_c) ||grad Q||^(s_c)

    double residual = 0.0; ///< ||Lap Q - Q + F(Q)|| / ||Q||_H1
    double gamma_final = 0.0;
    int iterations = 0;
    std::uint64_t seed_id = 0; ///< tag recorded with the output for reproducibility
};

/// Default positive localized seed exp(-|x|^2).
std::vector<cplx> default_seed(const SpatialGrid& g);

/// Fixed-point iteration Q <- gamma^s (1-Lap)^{-1} F(Q) with the power-
/// normalized stabilizer gamma = ||Q||_{H1}^2 / <F(Q), Q> and
/// s = (2p-1)/(2p-2); each iterate is replaced by its modulus (phase
/// projection). Converged when the relative H1 increment is below tol and
/// gamma is within tol of 1; throws on non-convergence or a degenerate seed.
GroundState petviashvili_solve(const NonlinearityContext& ctx, const std::vector<cplx>& seed,
                               double tol, int max_iter, std::uint64_t seed_id = 0);

/// Relative deviation of the three stationary-profile identities, reported
/// as |ratio - 1|:
///   [0] ||grad Q||^2 A / (B ||Q||^2)
///   [1] P(Q) B / (2p ||grad Q||^2)
///   [2] E(Q) / ((1/2 - 1/B) ||grad Q||^2)
struct StationaryIdentityErrors {
    double grad_mass = 0.0;
    double potential_grad = 0.0;
    double energy_grad = 0.0;
};
StationaryIdentityErrors stationary_identity_errors(const NonlinearityContext& ctx,
                                                    const GroundState& gs);

} // namespace chq
