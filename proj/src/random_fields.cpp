#include "chq/random_fields.hpp"

#include <cmath>
#include <numbers>

namespace chq {

double Lcg64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; clamp away from 0 so log stays finite.
    double u1 = uniform();
    if (u1 < 1e-300)
        u1 = 1e-300;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

std::vector<cplx> gaussian_field(const SpatialGrid& g, double amplitude, double width,
                                 const double* center, const double* momentum) {
    const int dim = g.dim();
    double c[4] = {0, 0, 0, 0};
    double k[4] = {0, 0, 0, 0};
    for (int d = 0; d < dim; ++d) {
        if (center)
            c[d] = center[d];
        if (momentum)
            k[d] = momentum[d];
    }
    std::vector<cplx> u(g.npoints());
    const double inv2w2 = 1.0 / (2.0 * width * width);
    int idx[4];
    for (std::size_t i = 0; i < u.size(); ++i) {
        g.decompose(i, idx);
        double q2 = 0.0, ph = 0.0;
        for (int d = 0; d < dim; ++d) {
            double x = g.coord(idx[d]);
            double dx = x - c[d];
            q2 += dx * dx;
            ph += k[d] * x;
        }
        double env = amplitude * std::exp(-q2 * inv2w2);
        u[i] = cplx(env * std::cos(ph), env * std::sin(ph));
    }
    return u;
}

std::vector<cplx> random_smooth_field(const SpatialGrid& g, std::uint64_t seed,
                                      const BumpFieldSpec& spec) {
    Lcg64 rng(seed);
    std::vector<cplx> u(g.npoints(), cplx(0.0, 0.0));
    const int dim = g.dim();
    for (int bump = 0; bump < spec.nbumps; ++bump) {
        double c[4], k[4];
        for (int d = 0; d < dim; ++d)
            c[d] = rng.uniform(-spec.center_spread * g.box(), spec.center_spread * g.box());
        double w = rng.uniform(spec.width_lo, spec.width_hi);
        cplx a = spec.amplitude * cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
        for (int d = 0; d < dim; ++d)
            k[d] = rng.uniform(-spec.max_momentum, spec.max_momentum);
        std::vector<cplx> bump_field = gaussian_field(g, 1.0, w, c, k);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] += a * bump_field[i];
    }
    return u;
}

} // namespace chq
