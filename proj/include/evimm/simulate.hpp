#pragma once

// Exact inverse-CDF sampling for both mixtures. The per-uniform transform is
// exposed so tests can inject uniforms directly.

#include "evimm/dataset.hpp"
#include "evimm/mixture.hpp"
#include "evimm/rng.hpp"

#include <cstddef>
#include <vector>

namespace evimm {

// Three-case inversion: U <= alpha emits exactly 0.0; alpha < U <= C_u maps
// through the gamma quantile; U > C_u maps through the GPD quantile of
// (U - C_u) / (1 - C_u).
double evimm_draw_from_uniform(double U, const EvimmParams& p);
double evmm_draw_from_uniform(double U, const EvmmParams& p);

std::vector<double> sample_evimm_values(std::size_t n, const EvimmParams& p, SeedSpec seed);
std::vector<double> sample_evmm_values(std::size_t n, const EvmmParams& p, SeedSpec seed);

Dataset sample_evimm(std::size_t n, const EvimmParams& p, SeedSpec seed);
Dataset sample_evmm(std::size_t n, const EvmmParams& p, SeedSpec seed);

} // namespace evimm
