#pragma once

#include "chq/grid.hpp"

namespace chq {

/// Unnormalized forward DFT of a row-major complex field:
/// out[m] = sum_j in[j] exp(-i k_m . x_j scaled to index space).
/// Safe for in == out. Plans are cached per (dim, M) and created with
/// deterministic heuristics, so repeated runs produce identical bits.
void fft_forward(const SpatialGrid& g, const std::vector<cplx>& in, std::vector<cplx>& out);

/// Inverse of fft_forward, including the 1/M^N normalization.
void fft_inverse(const SpatialGrid& g, const std::vector<cplx>& in, std::vector<cplx>& out);

} // namespace chq
