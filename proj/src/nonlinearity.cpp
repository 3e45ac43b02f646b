#include "chq/nonlinearity.hpp"

#include "chq/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace chq {

NonlinearityContext::NonlinearityContext(GridPtr grid, const ModelParams& params, double eps_x)
    : grid_(std::move(grid)), params_(params), exps_(derive_exponents(params)) {
    if (grid_->dim() != params_.dim)
        throw std::invalid_argument("nonlinearity: grid and params dimension mismatch");
    eps_x_ = (eps_x > 0.0) ? eps_x : 0.5 * grid_->spacing();
    wb_ = weight_field(*grid_, params_.b, eps_x_);
}

std::vector<double> NonlinearityContext::density(const std::vector<cplx>& u) const {
    const double half_p = 0.5 * params_.p;
    std::vector<double> rho(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        rho[i] = wb_[i] * std::pow(std::norm(u[i]), half_p);
    return rho;
}

std::vector<double> NonlinearityContext::hartree_potential(const std::vector<cplx>& u) const {
    return riesz_convolve(*grid_, density(u), params_.alpha);
}

std::vector<double> NonlinearityContext::local_multiplier(const std::vector<cplx>& u) const {
    std::vector<double> w = hartree_potential(u);
    const double e = 0.5 * (params_.p - 2.0); // |u|^{p-2} = (|u|^2)^{(p-2)/2}
    if (e == 0.0) {
        for (std::size_t i = 0; i < u.size(); ++i)
            w[i] *= wb_[i];
    } else {
        for (std::size_t i = 0; i < u.size(); ++i)
            w[i] *= wb_[i] * std::pow(std::norm(u[i]), e);
    }
    return w;
}

std::vector<cplx> NonlinearityContext::apply_F(const std::vector<cplx>& u) const {
    std::vector<double> w = local_multiplier(u);
    std::vector<cplx> f(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        f[i] = w[i] * u[i];
    return f;
}

double NonlinearityContext::potential_functional(const std::vector<cplx>& u) const {
    std::vector<double> rho = density(u);
    std::vector<double> v = riesz_convolve(*grid_, rho, params_.alpha);
    double s = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        s += v[i] * rho[i];
    return s * grid_->cell_volume();
}

double NonlinearityContext::mass(const std::vector<cplx>& u) const {
    return mass_integral(*grid_, u);
}

double NonlinearityContext::energy(const std::vector<cplx>& u) const {
    return 0.5 * grad_sq_integral(*grid_, u) -
           potential_functional(u) / (2.0 * params_.p);
}

double NonlinearityContext::energy_alt(const std::vector<cplx>& u) const {
    return 0.5 * grad_sq_integral(*grid_, u) - potential_functional(u) / params_.p;
}

} // namespace chq
