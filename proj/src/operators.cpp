#include "chq/operators.hpp"

#include "chq/fft.hpp"

#include <cmath>

namespace chq {

std::vector<double> riesz_convolve(const SpatialGrid& g, const std::vector<double>& rho,
                                   double alpha) {
    std::vector<cplx> work(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        work[i] = rho[i];
    fft_forward(g, work, work);
    const std::vector<double>& k2 = g.wave2();
    const double e = -0.5 * alpha; // |k|^(-alpha) = (k^2)^(-alpha/2)
    for (std::size_t i = 0; i < work.size(); ++i)
        work[i] *= (k2[i] == 0.0) ? 0.0 : std::pow(k2[i], e);
    fft_inverse(g, work, work);
    std::vector<double> out(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        out[i] = work[i].real();
    return out;
}

void free_propagate(const SpatialGrid& g, std::vector<cplx>& u, double t) {
    fft_forward(g, u, u);
    const std::vector<double>& k2 = g.wave2();
    for (std::size_t i = 0; i < u.size(); ++i) {
        double ph = -k2[i] * t;
        u[i] *= cplx(std::cos(ph), std::sin(ph));
    }
    fft_inverse(g, u, u);
}

std::vector<cplx> laplacian(const SpatialGrid& g, const std::vector<cplx>& u) {
    std::vector<cplx> out(u.size());
    fft_forward(g, u, out);
    const std::vector<double>& k2 = g.wave2();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] *= -k2[i];
    fft_inverse(g, out, out);
    return out;
}

std::vector<std::vector<cplx>> gradient(const SpatialGrid& g, const std::vector<cplx>& u) {
    std::vector<cplx> hat(u.size());
    fft_forward(g, u, hat);
    const int dim = g.dim();
    std::vector<std::vector<cplx>> out(dim);
    std::vector<cplx> comp(u.size());
    int idx[4];
    for (int d = 0; d < dim; ++d) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            g.decompose(i, idx);
            double k = g.wavenumber(idx[d]);
            comp[i] = cplx(0.0, k) * hat[i];
        }
        out[d].resize(u.size());
        fft_inverse(g, comp, out[d]);
    }
    return out;
}

std::vector<cplx> helmholtz_inverse(const SpatialGrid& g, const std::vector<cplx>& f) {
    std::vector<cplx> out(f.size());
    fft_forward(g, f, out);
    const std::vector<double>& k2 = g.wave2();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] /= (1.0 + k2[i]);
    fft_inverse(g, out, out);
    return out;
}

double sobolev_seminorm(const SpatialGrid& g, const std::vector<cplx>& u, double s) {
    std::vector<cplx> hat(u.size());
    fft_forward(g, u, hat);
    const std::vector<double>& k2 = g.wave2();
    double acc = 0.0;
    for (std::size_t i = 0; i < hat.size(); ++i) {
        double w;
        if (s == 0.0)
            w = 1.0; // plain L^2, mean mode included
        else
            w = (k2[i] == 0.0) ? 0.0 : std::pow(k2[i], s);
        acc += w * std::norm(hat[i]);
    }
    // Parseval: integral |f|^2 = (h^N / M^N) * sum |FFT f|^2
    acc *= g.cell_volume() / static_cast<double>(g.npoints());
    return std::sqrt(acc);
}

double grad_sq_integral(const SpatialGrid& g, const std::vector<cplx>& u) {
    double r = sobolev_seminorm(g, u, 1.0);
    return r * r;
}

} // namespace chq
