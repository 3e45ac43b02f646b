#include "chq/morawetz.hpp"

#include "chq/fft.hpp"
#include "chq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chq {
namespace {

// Fill the three cached radial fields from the piecewise a'(r).
void fill_weight_fields(MorawetzWeight& w) {
    const SpatialGrid& g = *w.grid;
    const std::vector<double>& r2f = g.radius2();
    const std::size_t n = g.npoints();
    const int N = g.dim();
    const double R = w.R;
    w.aprime_over_r.resize(n);
    w.asecond.resize(n);
    w.lap_a.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::sqrt(r2f[i]);
        double apr_r, app; // a'(r)/r and a''(r)
        if (w.pure_virial || r <= R) {
            apr_r = 2.0;
            app = 2.0;
        } else if (r <= 2.0 * R) {
            double s = r - R;
            apr_r = (2.0 * R + 2.0 * s - s * s / R) / r;
            app = 2.0 - 2.0 * s / R;
        } else {
            apr_r = 3.0 * R / r;
            app = 0.0;
        }
        w.aprime_over_r[i] = apr_r;
        w.asecond[i] = app;
        w.lap_a[i] = app + (N - 1) * apr_r;
    }
}

} // namespace

double MorawetzWeight::min_hessian_eigenvalue() const {
    // Eigenvalues of the Hessian of a radial function: a'' once (radial
    // direction) and a'/r with multiplicity N-1 (tangential directions).
    double m = asecond.empty() ? 0.0 : asecond[0];
    for (double v : asecond)
        m = std::min(m, v);
    for (double v : aprime_over_r)
        m = std::min(m, v);
    return m;
}

MorawetzWeight build_weight(GridPtr grid, double R) {
    if (!(R > 0.0))
        throw std::invalid_argument("weight: R must be positive");
    if (!(2.0 * R < 0.45 * grid->box()))
        throw std::invalid_argument("weight: need 2R < 0.45 L to fit the box");
    MorawetzWeight w;
    w.grid = std::move(grid);
    w.R = R;
    w.pure_virial = false;
    fill_weight_fields(w);
    return w;
}

MorawetzWeight build_virial_weight(GridPtr grid) {
    MorawetzWeight w;
    w.grid = std::move(grid);
    w.R = 0.0;
    w.pure_virial = true;
    fill_weight_fields(w);
    return w;
}

std::vector<double> cutoff_field(const SpatialGrid& g, double R) {
    if (!(R > 0.0) || !(R < 0.5 * g.box()))
        throw std::invalid_argument("cutoff: need 0 < R < L/2");
    const std::vector<double>& r2f = g.radius2();
    std::vector<double> chi(g.npoints());
    const double c = 0.75 * R;
    const double inv_w = 8.0 / R;
    for (std::size_t i = 0; i < chi.size(); ++i)
        chi[i] = 0.5 * std::erfc((std::sqrt(r2f[i]) - c) * inv_w);
    return chi;
}

double morawetz_action(const SpatialGrid& g, const std::vector<cplx>& u,
                       const MorawetzWeight& w) {
    std::vector<std::vector<cplx>> du = gradient(g, u);
    const int dim = g.dim();
    int idx[4];
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        g.decompose(i, idx);
        cplx radial(0.0, 0.0);
        for (int d = 0; d < dim; ++d)
            radial += g.coord(idx[d]) * du[d][i];
        // Im(conj(u) grad u . grad a) with grad a = (a'/r) x
        acc += w.aprime_over_r[i] * std::imag(std::conj(u[i]) * radial);
    }
    return 2.0 * acc * g.cell_volume();
}

namespace {

// The two terms shared by both d/dt M_a assemblies:
//   t_bilap   = -int Lap(a) Lap(|u|^2)
//   t_hessian = 4 int [ (a'/r)|grad u|^2 + (a'' - a'/r)|x_hat . grad u|^2 ]
void linear_rhs_terms(const SpatialGrid& g, const std::vector<cplx>& u,
                      const MorawetzWeight& w, double& t_bilap, double& t_hessian) {
    const std::vector<double>& r2f = g.radius2();
    std::vector<std::vector<cplx>> du = gradient(g, u);
    const int dim = g.dim();
    int idx[4];

    std::vector<cplx> usq(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        usq[i] = std::norm(u[i]);
    std::vector<cplx> lap_usq = laplacian(g, usq);

    double acc1 = 0.0, acc2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc1 += w.lap_a[i] * lap_usq[i].real();

        double g2 = 0.0;
        cplx radial(0.0, 0.0);
        g.decompose(i, idx);
        for (int d = 0; d < dim; ++d) {
            g2 += std::norm(du[d][i]);
            radial += g.coord(idx[d]) * du[d][i];
        }
        // |x_hat . grad u|^2 = |x . grad u|^2 / r^2; its coefficient
        // a'' - a'/r vanishes identically on the core, so the origin
        // contributes nothing and the division is guarded, not regularized.
        double rad2 = (r2f[i] > 0.0) ? std::norm(radial) / r2f[i] : 0.0;
        acc2 += w.aprime_over_r[i] * g2 + (w.asecond[i] - w.aprime_over_r[i]) * rad2;
    }
    t_bilap = -acc1 * g.cell_volume();
    t_hessian = 4.0 * acc2 * g.cell_volume();
}

} // namespace

double rhs_direct(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                  const MorawetzWeight& w) {
    const SpatialGrid& g = ctx.grid();
    double t_bilap, t_hessian;
    linear_rhs_terms(g, u, w, t_bilap, t_hessian);

    // F enters with the sign it carries on the right-hand side of the
    // evolution equation: i du/dt + Lap u = -(Hartree term), so F = -F_nl.
    std::vector<cplx> F = ctx.apply_F(u);
    for (cplx& z : F)
        z = -z;
    std::vector<std::vector<cplx>> dF = gradient(g, F);
    std::vector<std::vector<cplx>> du = gradient(g, u);

    const int dim = g.dim();
    int idx[4];
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        g.decompose(i, idx);
        double dot = 0.0;
        for (int d = 0; d < dim; ++d) {
            double bracket =
                std::real(std::conj(F[i]) * du[d][i] - std::conj(u[i]) * dF[d][i]);
            dot += w.aprime_over_r[i] * g.coord(idx[d]) * bracket;
        }
        acc += dot;
    }
    double t_force = 2.0 * acc * g.cell_volume();
    return t_bilap + t_hessian + t_force;
}

double pairwise_double_sum(const NonlinearityContext& ctx, const std::vector<double>& rho,
                           const MorawetzWeight& w, double delta,
                           std::size_t pairwise_budget) {
    const SpatialGrid& g = ctx.grid();
    const std::size_t n = g.npoints();
    if (n * n > pairwise_budget)
        throw std::invalid_argument("pairwise: grid exceeds the pair budget");
    const int dim = g.dim();
    const double d2 = delta * delta;
    const double expo = 0.5 * (dim - ctx.params().alpha + 2.0);
    const bool three_halves = std::abs(expo - 1.5) < 1e-14;

    // Flatten coordinates and grad(a) = (a'/r) x into contiguous arrays so
    // the O(n^2) loop touches memory linearly.
    std::vector<double> xs(n * dim), ga(n * dim);
    int idx[4];
    for (std::size_t i = 0; i < n; ++i) {
        g.decompose(i, idx);
        for (int d = 0; d < dim; ++d) {
            double x = g.coord(idx[d]);
            xs[i * dim + d] = x;
            ga[i * dim + d] = w.aprime_over_r[i] * x;
        }
    }

    // Symmetric kernel: sum ordered pairs once and double. The diagonal
    // vanishes (grad a(x) - grad a(x) = 0). Fixed summation order keeps the
    // result bit-reproducible.
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rho[i] == 0.0)
            continue;
        const double* xi = &xs[i * dim];
        const double* gi = &ga[i * dim];
        double row = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist2 = 0.0, dot = 0.0;
            for (int d = 0; d < dim; ++d) {
                double dx = xi[d] - xs[j * dim + d];
                dist2 += dx * dx;
                dot += (gi[d] - ga[j * dim + d]) * dx;
            }
            double q = dist2 + d2;
            double denom = three_halves ? q * std::sqrt(q) : std::pow(q, expo);
            row += dot / denom * rho[j];
        }
        acc += row * rho[i];
    }
    double h2n = g.cell_volume() * g.cell_volume();
    return 2.0 * acc * h2n;
}

ExpandedRhs rhs_expanded(const NonlinearityContext& ctx, const std::vector<cplx>& u,
                         const MorawetzWeight& w, std::size_t pairwise_budget) {
    const SpatialGrid& g = ctx.grid();
    const ModelParams& mp = ctx.params();
    ExpandedRhs out{};
    linear_rhs_terms(g, u, w, out.t_bilap, out.t_hessian);

    std::vector<double> rho = ctx.density(u);
    std::vector<double> V = riesz_convolve(g, rho, mp.alpha);

    const std::vector<double>& r2f = g.radius2();
    const double e2 = ctx.eps_x() * ctx.eps_x();
    double acc3 = 0.0, acc4 = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        double vr = V[i] * rho[i];
        acc3 += w.lap_a[i] * vr;
        // grad(a) . x/(|x|^2 + eps^2) = a'(r) r / (r^2 + eps^2), written with
        // the same regularized radius as the singular weight itself.
        acc4 += w.aprime_over_r[i] * r2f[i] / (r2f[i] + e2) * vr;
    }
    out.t_lapa_pot = -(2.0 - 4.0 / mp.p) * acc3 * g.cell_volume();
    out.t_weight_pot = (4.0 * mp.b / mp.p) * acc4 * g.cell_volume();

    double delta = 0.5 * g.spacing();
    double S = pairwise_double_sum(ctx, rho, w, delta, pairwise_budget);
    out.t_pairwise = -(2.0 * ctx.exps().K_riesz * (g.dim() - mp.alpha) / mp.p) * S;
    return out;
}

double virial_double_sum_pairwise(const NonlinearityContext& ctx, const std::vector<double>& rho,
                                  double delta, std::size_t pairwise_budget) {
    MorawetzWeight w = build_virial_weight(ctx.grid_ptr());
    return ctx.exps().K_riesz * pairwise_double_sum(ctx, rho, w, delta, pairwise_budget);
}

double virial_double_sum_fft(const NonlinearityContext& ctx, const std::vector<double>& rho,
                             double delta) {
    const SpatialGrid& g = ctx.grid();
    const int M = g.points_per_axis();
    const int dim = g.dim();
    // Doubled box: circular convolution on the zero-padded lattice equals
    // the linear convolution the pairwise sum performs.
    SpatialGrid pg(dim, 2 * M, 2.0 * g.box());
    std::vector<cplx> rpad(pg.npoints(), cplx(0.0, 0.0));
    std::vector<cplx> kern(pg.npoints());

    int idx[4];
    for (std::size_t i = 0; i < rho.size(); ++i) {
        g.decompose(i, idx);
        std::size_t flat = 0;
        for (int d = 0; d < dim; ++d)
            flat = flat * (2 * M) + static_cast<std::size_t>(idx[d]);
        rpad[flat] = rho[i];
    }

    const double h = g.spacing();
    const double d2 = delta * delta;
    const double expo = 0.5 * (dim - ctx.params().alpha + 2.0);
    const double K2 = 2.0 * ctx.exps().K_riesz;
    for (std::size_t j = 0; j < kern.size(); ++j) {
        pg.decompose(j, idx);
        double z2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            int off = (idx[d] <= M) ? idx[d] : idx[d] - 2 * M;
            double z = off * h;
            z2 += z * z;
        }
        kern[j] = K2 * z2 / std::pow(z2 + d2, expo);
    }

    fft_forward(pg, rpad, rpad);
    fft_forward(pg, kern, kern);
    for (std::size_t j = 0; j < kern.size(); ++j)
        kern[j] *= rpad[j];
    fft_inverse(pg, kern, kern);

    // Extract the original block and close the quadratic form.
    double acc = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        g.decompose(i, idx);
        std::size_t flat = 0;
        for (int d = 0; d < dim; ++d)
            flat = flat * (2 * M) + static_cast<std::size_t>(idx[d]);
        acc += kern[flat].real() * rho[i];
    }
    double h2n = g.cell_volume() * g.cell_volume();
    return acc * h2n;
}

double localization_check(const SpatialGrid& g, const std::vector<cplx>& u, double R) {
    std::vector<double> chi = cutoff_field(g, R);

    std::vector<std::vector<cplx>> du = gradient(g, u);
    double lhs = 0.0, grad_total = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double g2 = 0.0;
        for (int d = 0; d < g.dim(); ++d)
            g2 += std::norm(du[d][i]);
        grad_total += g2;
        lhs += chi[i] * chi[i] * g2;
    }

    std::vector<cplx> chiu(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        chiu[i] = chi[i] * u[i];
    std::vector<std::vector<cplx>> dcu = gradient(g, chiu);
    std::vector<cplx> chic(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i)
        chic[i] = chi[i];
    std::vector<cplx> lap_chi = laplacian(g, chic);

    double rhs = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double g2 = 0.0;
        for (int d = 0; d < g.dim(); ++d)
            g2 += std::norm(dcu[d][i]);
        rhs += g2 + chi[i] * lap_chi[i].real() * std::norm(u[i]);
    }
    return std::abs(lhs - rhs) / grad_total;
}

std::vector<double> dyadic_window_averages(const std::vector<double>& times,
                                           const std::vector<double>& values, int nwindows) {
    if (times.size() != values.size() || times.size() < 2 || nwindows < 1)
        throw std::invalid_argument("window averages: need a sampled series");
    const double T = times.back();
    std::vector<double> bounds(nwindows + 1);
    bounds[0] = times.front();
    for (int j = 1; j <= nwindows; ++j)
        bounds[j] = T / static_cast<double>(1ULL << (nwindows - j));

    std::vector<double> out(nwindows, 0.0);
    for (int j = 0; j < nwindows; ++j) {
        double lo = bounds[j], hi = bounds[j + 1];
        double integral = 0.0;
        for (std::size_t i = 0; i + 1 < times.size(); ++i) {
            double a = std::max(times[i], lo), b = std::min(times[i + 1], hi);
            if (b <= a)
                continue;
            // linear interpolation of the recorded series on [a, b]
            double t0 = times[i], t1 = times[i + 1];
            double va = values[i] + (values[i + 1] - values[i]) * (a - t0) / (t1 - t0);
            double vb = values[i] + (values[i + 1] - values[i]) * (b - t0) / (t1 - t0);
            integral += 0.5 * (va + vb) * (b - a);
        }
        out[j] = (hi > lo) ? integral / (hi - lo) : 0.0;
    }
    return out;
}

} // namespace chq
