#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace chq {

using cplx = std::complex<double>;

/// Uniform periodic grid on the cube [-L/2, L/2)^N with M points per axis.
/// Point j along an axis sits at x_j = -L/2 + j h, h = L/M; storage is
/// row-major (last axis fastest). The Fourier lattice carries wavenumbers
/// k = 2 pi m / L with the signed index m in [-M/2, M/2).
class SpatialGrid {
  public:
    SpatialGrid(int dim, int points_per_axis, double box_length);

    int dim() const { return dim_; }
    int points_per_axis() const { return m_; }
    double box() const { return box_; }
    double spacing() const { return h_; }
    std::size_t npoints() const { return n_; }
    double cell_volume() const { return cellvol_; } ///< h^N

    /// Coordinate of index j in [0, M) along any axis.
    double coord(int j) const { return -0.5 * box_ + h_ * j; }
    /// Signed Fourier index of transform index j (fftfreq layout).
    int freq_index(int j) const { return j < (m_ + 1) / 2 ? j : j - m_; }
    /// Wavenumber of transform index j along any axis.
    double wavenumber(int j) const { return two_pi_over_L_ * freq_index(j); }
    double max_wavenumber() const; ///< magnitude of the largest axis wavenumber

    /// Decompose a flat row-major index into per-axis indices (size dim()).
    void decompose(std::size_t flat, int* idx) const;

    /// |x|^2 at every grid point (cached after first use).
    const std::vector<double>& radius2() const;
    /// |k|^2 at every transform point (cached after first use).
    const std::vector<double>& wave2() const;

  private:
    int dim_;
    int m_;
    double box_, h_, cellvol_, two_pi_over_L_;
    std::size_t n_;
    mutable std::once_flag r2_once_, k2_once_;
    mutable std::vector<double> r2_, k2_;
};

using GridPtr = std::shared_ptr<const SpatialGrid>;

inline GridPtr make_grid(int dim, int points_per_axis, double box_length) {
    return std::make_shared<const SpatialGrid>(dim, points_per_axis, box_length);
}

/// h^N-weighted sum of a real sample vector (the box quadrature).
double integrate(const SpatialGrid& g, const std::vector<double>& f);
/// integral of |u|^2
double mass_integral(const SpatialGrid& g, const std::vector<cplx>& u);
/// integral of |u|^2 over the outer region |x| > 0.4 L (truncation indicator)
double boundary_mass(const SpatialGrid& g, const std::vector<cplx>& u);
/// integral of |u|^2 over the ball |x| <= radius
double ball_mass(const SpatialGrid& g, const std::vector<cplx>& u, double radius);
/// integral of |u|^q over the ball |x| <= radius
double ball_power_integral(const SpatialGrid& g, const std::vector<cplx>& u, double radius,
                           double q);

/// Regularized singular weight (|x|^2 + eps^2)^(b/2) sampled on the grid.
/// eps <= 0 selects the default eps = h/2.
std::vector<double> weight_field(const SpatialGrid& g, double b, double eps = 0.0);

} // namespace chq
