#pragma once

#include "chq/grid.hpp"
#include "chq/model.hpp"

namespace chq {

/// Bundles the parameter set, derived exponents, grid, and the sampled
/// singular weight so the nonlocal nonlinearity and its functionals can be
/// evaluated without recomputing static fields. Read-only after construction;
/// use one context per concurrent simulation.
class NonlinearityContext {
  public:
    /// eps_x <= 0 selects the default regularization h/2.
    NonlinearityContext(GridPtr grid, const ModelParams& params, double eps_x = 0.0);

    const SpatialGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    const ModelParams& params() const { return params_; }
    const DerivedExponents& exps() const { return exps_; }
    const std::vector<double>& weight() const { return wb_; }
    double eps_x() const { return eps_x_; }

    /// rho = w_b |u|^p (nonnegative real field).
    std::vector<double> density(const std::vector<cplx>& u) const;
    /// V = (|k|^{-alpha} multiplier) applied to rho; real, zero box mean.
    std::vector<double> hartree_potential(const std::vector<cplx>& u) const;
    /// F(u) = V w_b |u|^{p-2} u (phase-covariant; F(0) = 0).
    std::vector<cplx> apply_F(const std::vector<cplx>& u) const;
    /// Local multiplier W = V w_b |u|^{p-2} (real), so F(u) = W u. This is
    /// the phase rate of the exact nonlinear substep.
    std::vector<double> local_multiplier(const std::vector<cplx>& u) const;

    /// P(u) = integral of V rho (nonnegative, 2p-homogeneous).
    double potential_functional(const std::vector<cplx>& u) const;
    double mass(const std::vector<cplx>& u) const;
    /// Conserved energy: 1/2 integral |grad u|^2 - (1/(2p)) P(u).
    double energy(const std::vector<cplx>& u) const;
    /// Alternative bookkeeping with coefficient 1/p on P instead of 1/(2p).
    /// Recorded alongside energy() in diagnostics; it visibly drifts under
    /// the flow, which is the discriminating check for the 1/(2p) choice.
    double energy_alt(const std::vector<cplx>& u) const;

  private:
    GridPtr grid_;
    ModelParams params_;
    DerivedExponents exps_;
    double eps_x_;
    std::vector<double> wb_;
};

} // namespace chq
