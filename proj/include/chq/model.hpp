#pragma once

#include <string>
#include <vector>

namespace chq {

/// Physical parameters of the focusing inhomogeneous Hartree-type equation
///   i u_t + Lap u = -(I_alpha * |.|^b |u|^p) |x|^b |u|^{p-2} u
/// on R^N, realized numerically on a periodic box.
struct ModelParams {
    int dim = 3;        ///< spatial dimension N >= 3
    double alpha = 2.0; ///< Riesz potential order, 0 < alpha < N
    double b = -0.5;    ///< weight exponent, b < 0
    double p = 3.0;     ///< nonlinearity power, p >= 2
};

/// Exponents derived from ModelParams. B and A are the Gagliardo-Nirenberg
/// powers: P(u) <= C0 ||u||^A ||grad u||^B, with B = N p - N - alpha - 2 b
/// and A = 2 p - B. The identities B = 2 (p-1) s_c + 2 and
/// A = 2 (p-1) (1 - s_c) tie them to the scaling-critical regularity s_c.
struct DerivedExponents {
    double s_c;     ///< critical Sobolev index N/2 - (2 + 2 b + alpha)/(2 (p-1))
    double B;       ///< gradient power in the sharp interpolation bound
    double A;       ///< mass power, A = 2 p - B
    double p_lower; ///< admissible p range: p_lower < p < p_upper
    double p_upper;
    double K_riesz; ///< Riesz kernel constant: I_alpha(x) = K / |x|^{N-alpha}
};

/// Outcome of parameter validation; violations lists every failed constraint.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Check admissibility: N >= 3, 0 < alpha < N, b < 0,
/// min{2+alpha+2b, N+b, N+4b+2alpha, 4+alpha+2b-N} > 0, p >= 2, and
/// 1 + (2+alpha+2b)/N < p < 1 + (2+alpha+2b)/(N-2)  (strict on both sides).
ValidationReport validate(const ModelParams& mp);

/// Compute derived exponents. Throws std::invalid_argument if validate fails.
DerivedExponents derive_exponents(const ModelParams& mp);

} // namespace chq
