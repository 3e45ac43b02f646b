#pragma once

#include "chq/nonlinearity.hpp"

namespace chq {

/// Radial virial/Morawetz weight a(|x|) with piecewise-defined radial
/// derivative:
///   a'(r) = 2r                          on [0, R]   (pure virial core)
///   a'(r) = 2R + 2(r-R) - (r-R)^2/R     on (R, 2R]  (bridge, a'' linear 2 -> 0)
///   a'(r) = 3R                          on (2R, inf)
/// a'' is continuous across both interfaces, a' and a'' are nonnegative
/// everywhere, and the Hessian of a has eigenvalues a'' (radial) and a'/r
/// (tangential), both nonnegative — cached per grid point. Only derivatives
/// of a are ever used, so the additive normalization of a is irrelevant.
/// The degenerate constructor build_virial_weight extends the core branch
/// a = |x|^2 to the whole box (test weight for the classical virial case).
struct MorawetzWeight {
    GridPtr grid;
    double R = 0.0;          ///< core radius; 0 marks the pure-virial weight
    bool pure_virial = false;

    // Cached per-point radial data. grad a = aprime_over_r * x, so no field
    // here is ever singular: a'/r == 2 exactly on the core (including the
    // origin) and r >= R > 0 wherever the formula actually divides by r.
    std::vector<double> aprime_over_r; ///< a'(r)/r
    std::vector<double> asecond;       ///< a''(r)
    std::vector<double> lap_a;         ///< a'' + (N-1) a'/r

    /// Smallest Hessian eigenvalue over all grid points (PSD check).
    double min_hessian_eigenvalue() const;
};

/// Build the piecewise weight; requires 2R < 0.45 L so the bridge fits well
/// inside the box.
MorawetzWeight build_weight(GridPtr grid, double R);
/// a = |x|^2 on the whole box (classical virial test weight).
MorawetzWeight build_virial_weight(GridPtr grid);

/// Radial cutoff: 1 near the origin, 0 outside |x| ~ R, with an error-
/// function transition chi(r) = erfc((r - 0.75 R)/(R/8))/2. The Gaussian
/// roll-off keeps the spectral tail of chi far below identity-check
/// tolerances at working resolutions.
std::vector<double> cutoff_field(const SpatialGrid& g, double R);

/// M_a(u) = 2 Im integral of conj(u) grad(u) . grad(a).
double morawetz_action(const SpatialGrid& g, const std::vector<cplx>& u,
                       const MorawetzWeight& w);

/// d/dt M_a assembled in bracket form:
///   -int Lap(a) Lap(|u|^2) + 4 int a_{jk} Re(d_j conj(u) d_k u)
///   + 2 int grad(a) . P[F, u],   P[f,g] = Re(conj(f) grad g - conj(g) grad f)
/// with F = -(Hartree nonlinearity)(u), matching the evolution's sign.
double rhs_direct(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                  const MorawetzWeight& w);

/// Term-by-term assembly of the expanded form of d/dt M_a; total is the sum.
struct ExpandedRhs {
    double t_bilap;      ///< -int Lap(a) Lap(|u|^2)
    double t_hessian;    ///< 4 int a_{jk} Re(d_j conj(u) d_k u)
    double t_lapa_pot;   ///< -(2 - 4/p) int Lap(a) V rho
    double t_weight_pot; ///< (4b/p) int a'(r) r/(r^2+eps^2) V rho
    double t_pairwise;   ///< -(2K(N-alpha)/p) * regularized pairwise double sum
    double total() const { return t_bilap + t_hessian + t_lapa_pot + t_weight_pot + t_pairwise; }
};

/// Expanded d/dt M_a with the nonlocal term evaluated as an O(M^(2N))
/// pairwise sum over grid points (kernel regularized with delta = h/2).
/// Refuses grids whose pair count exceeds pairwise_budget.
ExpandedRhs rhs_expanded(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                         const MorawetzWeight& w,
                         std::size_t pairwise_budget = 300000000ULL);

/// The bare double sum S = sum_{x,y} (grad a(x) - grad a(y)).(x-y) /
/// (|x-y|^2 + delta^2)^{(N-alpha+2)/2} rho(x) rho(y) h^{2N} (no prefactor).
double pairwise_double_sum(const NonlinearityContext& ctx, const std::vector<double>& rho,
                           const MorawetzWeight& w, double delta,
                           std::size_t pairwise_budget);

/// For the virial weight the pairwise kernel depends only on x - y, so the
/// same sum collapses to a linear convolution; this evaluates it by
/// zero-padded FFT with the identical regularized kernel. Cross-validates
/// the O(M^(2N)) loop against an O(M^N log M) evaluation: the two must agree
/// to roundoff.
double virial_double_sum_fft(const NonlinearityContext& ctx, const std::vector<double>& rho,
                             double delta);
/// Pairwise counterpart of virial_double_sum_fft (same kernel, direct loop).
double virial_double_sum_pairwise(const NonlinearityContext& ctx, const std::vector<double>& rho,
                                  double delta, std::size_t pairwise_budget);

/// Residual of the cutoff localization identity
///   int chi^2 |grad u|^2 = int |grad(chi u)|^2 + int chi Lap(chi) |u|^2,
/// normalized by int |grad u|^2.
double localization_check(const SpatialGrid& g, const std::vector<cplx>& u, double R);

/// Averages of a recorded time series over dyadic windows
/// [0, T/2^(n-1)], (T/2^(n-1), T/2^(n-2)], ..., (T/2, T] (trapezoid rule;
/// n = nwindows). Used on the local |u|^q integrals of a trajectory.
std::vector<double> dyadic_window_averages(const std::vector<double>& times,
                                           const std::vector<double>& values, int nwindows);

} // namespace chq
