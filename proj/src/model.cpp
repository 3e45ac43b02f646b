#include <chq/model.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chq {

ValidationReport validate(const ModelParams& mp) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    std::ostringstream os;

    if (mp.dim < 3) fail("dimension must satisfy N >= 3");
    if (!(mp.alpha > 0.0) || !(mp.alpha < mp.dim)) {
        os.str("");
        os << "alpha must lie in (0, N): alpha=" << mp.alpha << " N=" << mp.dim;
        fail(os.str());
    }
    if (!(mp.b < 0.0)) fail("weight exponent b must be negative");
    if (!(mp.p >= 2.0)) fail("nonlinearity power p must satisfy p >= 2");

    const double N = mp.dim;
    const double adm = std::min(std::min(2.0 + mp.alpha + 2.0 * mp.b, N + mp.b),
                                std::min(N + 4.0 * mp.b + 2.0 * mp.alpha,
                                         4.0 + mp.alpha + 2.0 * mp.b - N));
    if (!(adm > 0.0)) {
        os.str("");
        os << "admissibility min{2+alpha+2b, N+b, N+4b+2alpha, 4+alpha+2b-N} = "
           << adm << " must be positive";
        fail(os.str());
    }

    // strict intercritical window (equivalent to 0 < s_c < 1)
    const double lo = 1.0 + (2.0 + mp.alpha + 2.0 * mp.b) / N;
    const double hi = 1.0 + (2.0 + mp.alpha + 2.0 * mp.b) / (N - 2.0);
    if (!(mp.p > lo) || !(mp.p < hi)) {
        os.str("");
        os << "p must lie strictly in (" << lo << ", " << hi << "): p=" << mp.p;
        fail(os.str());
    }
    return rep;
}

DerivedExponents derive_exponents(const ModelParams& mp) {
    const ValidationReport rep = validate(mp);
    if (!rep.ok) {
        std::string all = "invalid model parameters:";
        for (const auto& v : rep.violations) all += " [" + v + "]";
        throw std::invalid_argument(all);
    }
    DerivedExponents d{};
    const double N = mp.dim;
    d.s_c = N / 2.0 - (2.0 + 2.0 * mp.b + mp.alpha) / (2.0 * (mp.p - 1.0));
    d.B = N * mp.p - N - mp.alpha - 2.0 * mp.b;
    d.A = 2.0 * mp.p - d.B;
    d.p_lower = 1.0 + (2.0 + mp.alpha + 2.0 * mp.b) / N;
    d.p_upper = 1.0 + (2.0 + mp.alpha + 2.0 * mp.b) / (N - 2.0);
    // K = Gamma((N-alpha)/2) / (Gamma(alpha/2) pi^{N/2} 2^alpha), via lgamma
    // to stay stable for fractional arguments.
    const double lg = std::lgamma((N - mp.alpha) / 2.0) - std::lgamma(mp.alpha / 2.0)
                      - (N / 2.0) * std::log(M_PI) - mp.alpha * std::log(2.0);
    d.K_riesz = std::exp(lg);
    return d;
}

} // namespace chq
