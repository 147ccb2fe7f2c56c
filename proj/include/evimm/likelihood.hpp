#pragma once

// Log-likelihood evaluation for the mixtures. Support violations return
// -infinity rather than throwing, so optimizers can treat them as worst-case
// points. The gamma-bulk contribution uses the dataset's prefix sums, so one
// evaluation costs O(n_tail + log n).

#include "evimm/dataset.hpp"
#include "evimm/mixture.hpp"

#include <span>

namespace evimm {

// Joint log-likelihood of the full sample (zeros, bulk, tail) under the
// inlier mixture; x = u belongs to the tail.
double log_likelihood(const EvimmParams& p, const Dataset& d);

// Log-likelihood of the positive observations under the no-atom mixture.
// Zeros in the dataset are ignored here (the caller is responsible for
// deciding whether that is acceptable).
double log_likelihood(const EvmmParams& p, const Dataset& d);

// Log-likelihood of exceedances (x - u values, all > 0 expected) under a
// GPD(xi, sigma).
double gpd_excess_loglik(double xi, double sigma, std::span<const double> excess);

} // namespace evimm
