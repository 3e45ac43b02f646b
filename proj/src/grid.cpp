#include "chq/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chq {

SpatialGrid::SpatialGrid(int dim, int points_per_axis, double box_length)
    : dim_(dim), m_(points_per_axis), box_(box_length) {
    if (dim < 1 || dim > 4)
        throw std::invalid_argument("grid: dim must be in [1,4]");
    if (points_per_axis < 4)
        throw std::invalid_argument("grid: need at least 4 points per axis");
    if (points_per_axis % 2 != 0)
        throw std::invalid_argument("grid: points per axis must be even");
    if (!(box_length > 0.0))
        throw std::invalid_argument("grid: box length must be positive");
    h_ = box_ / m_;
    two_pi_over_L_ = 2.0 * std::numbers::pi / box_;
    n_ = 1;
    for (int d = 0; d < dim_; ++d)
        n_ *= static_cast<std::size_t>(m_);
    cellvol_ = std::pow(h_, dim_);
}

double SpatialGrid::max_wavenumber() const {
    return two_pi_over_L_ * (m_ / 2);
}

void SpatialGrid::decompose(std::size_t flat, int* idx) const {
    for (int d = dim_ - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(flat % m_);
        flat /= m_;
    }
}

const std::vector<double>& SpatialGrid::radius2() const {
    std::call_once(r2_once_, [this] {
        r2_.resize(n_);
        std::vector<double> ax(m_);
        for (int j = 0; j < m_; ++j) {
            double x = coord(j);
            ax[j] = x * x;
        }
        int idx[4];
        for (std::size_t i = 0; i < n_; ++i) {
            decompose(i, idx);
            double s = 0.0;
            for (int d = 0; d < dim_; ++d)
                s += ax[idx[d]];
            r2_[i] = s;
        }
    });
    return r2_;
}

const std::vector<double>& SpatialGrid::wave2() const {
    std::call_once(k2_once_, [this] {
        k2_.resize(n_);
        std::vector<double> ak(m_);
        for (int j = 0; j < m_; ++j) {
            double k = wavenumber(j);
            ak[j] = k * k;
        }
        int idx[4];
        for (std::size_t i = 0; i < n_; ++i) {
            decompose(i, idx);
            double s = 0.0;
            for (int d = 0; d < dim_; ++d)
                s += ak[idx[d]];
            k2_[i] = s;
        }
    });
    return k2_;
}

double integrate(const SpatialGrid& g, const std::vector<double>& f) {
    double s = 0.0;
    for (double v : f)
        s += v;
    return s * g.cell_volume();
}

double mass_integral(const SpatialGrid& g, const std::vector<cplx>& u) {
    double s = 0.0;
    for (const cplx& z : u)
        s += std::norm(z);
    return s * g.cell_volume();
}

double boundary_mass(const SpatialGrid& g, const std::vector<cplx>& u) {
    const std::vector<double>& r2 = g.radius2();
    const double thresh = 0.4 * g.box();
    const double t2 = thresh * thresh;
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (r2[i] > t2)
            s += std::norm(u[i]);
    return s * g.cell_volume();
}

double ball_mass(const SpatialGrid& g, const std::vector<cplx>& u, double radius) {
    const std::vector<double>& r2 = g.radius2();
    const double t2 = radius * radius;
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (r2[i] <= t2)
            s += std::norm(u[i]);
    return s * g.cell_volume();
}

double ball_power_integral(const SpatialGrid& g, const std::vector<cplx>& u, double radius,
                           double q) {
    const std::vector<double>& r2 = g.radius2();
    const double t2 = radius * radius;
    const double half_q = 0.5 * q;
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (r2[i] <= t2)
            s += std::pow(std::norm(u[i]), half_q);
    return s * g.cell_volume();
}

std::vector<double> weight_field(const SpatialGrid& g, double b, double eps) {
    if (eps <= 0.0)
        eps = 0.5 * g.spacing();
    const std::vector<double>& r2 = g.radius2();
    std::vector<double> w(g.npoints());
    const double e2 = eps * eps;
    const double half_b = 0.5 * b;
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::pow(r2[i] + e2, half_b);
    return w;
}

} // namespace chq
