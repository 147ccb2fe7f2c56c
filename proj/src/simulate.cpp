#include "evimm/simulate.hpp"

#include <stdexcept>

namespace evimm {

double evimm_draw_from_uniform(double U, const EvimmParams& p) {
    if (U <= p.alpha) return 0.0;
    double cu = p.cdf_below_u();
    if (U <= cu) return gamma_quantile((U - p.alpha) / (1.0 - p.alpha), p.bulk);
    return gpd_quantile((U - cu) / (1.0 - cu), p.tail());
}

double evmm_draw_from_uniform(double U, const EvmmParams& p) {
    return evmm_quantile(U, p);
}

std::vector<double> sample_evimm_values(std::size_t n, const EvimmParams& p, SeedSpec seed) {
    if (n == 0) throw std::invalid_argument("sample_evimm: n must be positive");
    UniformStream stream(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(evimm_draw_from_uniform(stream.next(), p));
    return out;
}

std::vector<double> sample_evmm_values(std::size_t n, const EvmmParams& p, SeedSpec seed) {
    if (n == 0) throw std::invalid_argument("sample_evmm: n must be positive");
    UniformStream stream(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(evmm_draw_from_uniform(stream.next(), p));
    return out;
}

Dataset sample_evimm(std::size_t n, const EvimmParams& p, SeedSpec seed) {
    return Dataset(sample_evimm_values(n, p, seed));
}

Dataset sample_evmm(std::size_t n, const EvmmParams& p, SeedSpec seed) {
    return Dataset(sample_evmm_values(n, p, seed));
}

} // namespace evimm
