#pragma once

#include "chq/grid.hpp"

namespace chq {

/// Convolution with the inverse-power kernel whose Fourier symbol is
/// |k|^(-alpha); the k = 0 mode is set to zero, so the result always has
/// zero box mean. Input and output are real samples.
std::vector<double> riesz_convolve(const SpatialGrid& g, const std::vector<double>& rho,
                                   double alpha);

/// In-place free propagation u <- exp(i t Lap) u, i.e. each Fourier mode is
/// rotated by exp(-i |k|^2 t). Negative t undoes positive t exactly.
void free_propagate(const SpatialGrid& g, std::vector<cplx>& u, double t);

/// Spectral Laplacian (multiplier -|k|^2).
std::vector<cplx> laplacian(const SpatialGrid& g, const std::vector<cplx>& u);

/// Spectral gradient; component d carries the multiplier i k_d.
std::vector<std::vector<cplx>> gradient(const SpatialGrid& g, const std::vector<cplx>& u);

/// (1 - Lap)^{-1} via the multiplier 1/(1 + |k|^2).
std::vector<cplx> helmholtz_inverse(const SpatialGrid& g, const std::vector<cplx>& f);

/// Homogeneous Sobolev seminorm of order s >= 0: the square root of
/// sum over modes of |k|^(2s) |u_hat|^2 with box-consistent normalization,
/// so s = 0 reproduces the L^2 norm exactly (0^0 counts as 1) and s > 0
/// drops the mean mode.
double sobolev_seminorm(const SpatialGrid& g, const std::vector<cplx>& u, double s);

/// integral of |grad u|^2 (the square of sobolev_seminorm at s = 1).
double grad_sq_integral(const SpatialGrid& g, const std::vector<cplx>& u);

} // namespace chq
