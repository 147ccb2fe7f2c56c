#pragma once

// Gamma and generalized Pareto building blocks: density, CDF, quantile.
// Parameter structs validate on construction; all operations are pure.

#include <stdexcept>

namespace evimm {

struct GammaParams {
    double eta;  // shape
    double beta; // scale

    GammaParams(double shape, double scale) : eta(shape), beta(scale) {
        if (!(eta > 0.0) || !(beta > 0.0))
            throw std::invalid_argument("GammaParams: shape and scale must be positive");
    }
    double mean() const { return eta * beta; }
    double variance() const { return eta * beta * beta; }
};

struct GpdParams {
    double xi;    // shape; heavy tail for xi > 0, bounded support for xi < 0
    double sigma; // scale
    double u;     // threshold (support lower endpoint)

    GpdParams(double shape, double scale, double threshold)
        : xi(shape), sigma(scale), u(threshold) {
        if (!(sigma > 0.0)) throw std::invalid_argument("GpdParams: scale must be positive");
    }
    // Upper endpoint of the support: u - sigma/xi when xi < 0, +inf otherwise.
    double upper_endpoint() const;
};

// Below this |xi| the GPD formulas switch to the exponential branch.
inline constexpr double kGpdXiEps = 1e-8;

double gamma_pdf(double x, const GammaParams& p);
double gamma_cdf(double x, const GammaParams& p);
// Inverse CDF for q in [0, 1); bracketed root-find to 1e-12 on the
// probability scale.
double gamma_quantile(double q, const GammaParams& p);

double gpd_pdf(double x, const GpdParams& p);
double gpd_cdf(double x, const GpdParams& p);
double gpd_quantile(double q, const GpdParams& p);

} // namespace evimm
