#pragma once

#include "chq/grid.hpp"

#include <cstdint>

namespace chq {

/// 64-bit linear congruential generator (Knuth's MMIX multiplier
/// 6364136223846793005 and increment 1442695040888963407). Pinned here, not
/// delegated to std::mt19937, so every "random" test field is reproducible
/// bit-for-bit from its seed in any language.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }
    /// Uniform double in [0, 1): top 53 bits of the state.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller (pairs generated, one cached).
    double normal();

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct BumpFieldSpec {
    int nbumps = 6;
    double center_spread = 0.25; ///< centers uniform in [-cs*L, cs*L]^N
    double width_lo = 0.6;
    double width_hi = 1.4;
    double amplitude = 1.0;     ///< scale of the complex bump amplitudes
    double max_momentum = 2.0;  ///< per-axis carrier wavenumber range
};

/// Superposition of complex Gaussian bumps with LCG-drawn centers, widths,
/// amplitudes, and carrier momenta. Smooth, localized away from the box
/// boundary, and fully determined by the seed.
std::vector<cplx> random_smooth_field(const SpatialGrid& g, std::uint64_t seed,
                                      const BumpFieldSpec& spec = {});

/// Single Gaussian a*exp(-|x-c|^2/(2 w^2))*exp(i k.x) sampled on the grid.
std::vector<cplx> gaussian_field(const SpatialGrid& g, double amplitude, double width,
                                 const double* center = nullptr,
                                 const double* momentum = nullptr);

} // namespace chq
