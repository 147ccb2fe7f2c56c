#pragma once

// Derivative-free Nelder-Mead simplex minimizer. Deterministic given the
// start point and step sizes; -inf/NaN objective values are treated as worst.

#include <functional>
#include <vector>

namespace evimm {

struct NelderMeadOptions {
    int max_iter = 2000;
    // Converged when the relative spread of simplex function values is below
    // this.
    double f_rel_tol = 1e-8;
    // Per-coordinate initial simplex steps; if empty, 5% of |x0| (or 0.05 for
    // zero coordinates).
    std::vector<double> initial_step;
};

struct NelderMeadResult {
    std::vector<double> x;
    double fmin = 0.0;
    int iterations = 0;
    bool converged = false;
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

} // namespace evimm
