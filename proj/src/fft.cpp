#include "chq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace chq {
namespace {

// One cached plan per (dim, M, sign). Plans are created with FFTW_ESTIMATE so
// planning never times candidate algorithms (timing would make the chosen
// algorithm machine-state dependent), and FFTW_UNALIGNED so the same plan can
// execute on any caller buffer.
struct PlanCache {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, fftw_plan> plans;

    fftw_plan get(int dim, int m, int sign) {
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_tuple(dim, m, sign);
        auto it = plans.find(key);
        if (it != plans.end())
            return it->second;
        std::size_t n = 1;
        for (int d = 0; d < dim; ++d)
            n *= static_cast<std::size_t>(m);
        fftw_complex* buf = fftw_alloc_complex(n);
        if (!buf)
            throw std::bad_alloc();
        int dims[4] = {m, m, m, m};
        fftw_plan p = fftw_plan_dft(dim, dims, buf, buf, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        if (!p)
            throw std::runtime_error("fft: plan creation failed");
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(const SpatialGrid& g, const std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
    if (in.size() != g.npoints())
        throw std::invalid_argument("fft: field size does not match grid");
    if (&out != &in)
        out = in; // execute in place on the destination copy
    fftw_plan p = cache().get(g.dim(), g.points_per_axis(), sign);
    fftw_complex* d = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(p, d, d);
}

} // namespace

void fft_forward(const SpatialGrid& g, const std::vector<cplx>& in, std::vector<cplx>& out) {
    run(g, in, out, FFTW_FORWARD);
}

void fft_inverse(const SpatialGrid& g, const std::vector<cplx>& in, std::vector<cplx>& out) {
    run(g, in, out, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(g.npoints());
    for (cplx& z : out)
        z *= scale;
}

} // namespace chq
