#include "evimm/dist.hpp"

#include "evimm/special.hpp"

#include <cmath>
#include <limits>

namespace evimm {

double GpdParams::upper_endpoint() const {
    if (xi < -kGpdXiEps) return u - sigma / xi;
    return std::numeric_limits<double>::infinity();
}

double gamma_pdf(double x, const GammaParams& p) {
    if (!(x > 0.0)) throw std::domain_error("gamma_pdf: x must be positive");
    return std::exp((p.eta - 1.0) * std::log(x) - x / p.beta - std::lgamma(p.eta) -
                    p.eta * std::log(p.beta));
}

double gamma_cdf(double x, const GammaParams& p) {
    if (x < 0.0) throw std::domain_error("gamma_cdf: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return gamma_p(p.eta, x / p.beta);
}

double gamma_quantile(double q, const GammaParams& p) {
    if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("gamma_quantile: q must be in [0,1)");
    if (q == 0.0) return 0.0;

    // Bracket [0, beta*(eta + 40*sqrt(eta) + 40)] covers q up to ~1-1e-14.
    double lo = 0.0;
    double hi = p.beta * (p.eta + 40.0 * std::sqrt(p.eta) + 40.0);
    double flo = -q;
    double fhi = gamma_cdf(hi, p) - q;
    while (fhi < 0.0) { // paranoia for extreme shapes
        hi *= 2.0;
        fhi = gamma_cdf(hi, p) - q;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double fx = gamma_cdf(x, p) - q;
        if (std::fabs(fx) < 1e-15) break;
        if (fx > 0.0) { hi = x; fhi = fx; }
        else { lo = x; flo = fx; }
        // Newton step from the current point, falling back to secant/bisection
        // whenever it leaves the bracket.
        double step_x = x;
        double pdf = (x > 0.0) ? gamma_pdf(x, p) : 0.0;
        if (pdf > 0.0) step_x = x - fx / pdf;
        if (!(step_x > lo) || !(step_x < hi)) {
            double denom = fhi - flo;
            step_x = (denom != 0.0) ? lo - flo * (hi - lo) / denom : 0.5 * (lo + hi);
            if (!(step_x > lo) || !(step_x < hi)) step_x = 0.5 * (lo + hi);
        }
        if (hi - lo < 1e-15 * (1.0 + hi)) { x = 0.5 * (lo + hi); break; }
        x = step_x;
    }
    return x;
}

double gpd_pdf(double x, const GpdParams& p) {
    if (x < p.u) throw std::domain_error("gpd_pdf: x below threshold");
    if (p.xi < -kGpdXiEps && x > p.upper_endpoint())
        throw std::domain_error("gpd_pdf: x beyond upper endpoint");
    double z = (x - p.u) / p.sigma;
    if (std::fabs(p.xi) < kGpdXiEps) return std::exp(-z) / p.sigma;
    double t = 1.0 + p.xi * z;
    if (t <= 0.0) return 0.0; // endpoint for xi < 0
    return std::exp(-(1.0 / p.xi + 1.0) * std::log1p(p.xi * z)) / p.sigma;
}

double gpd_cdf(double x, const GpdParams& p) {
    if (x < p.u) throw std::domain_error("gpd_cdf: x below threshold");
    double z = (x - p.u) / p.sigma;
    if (std::fabs(p.xi) < kGpdXiEps) return -std::expm1(-z);
    if (p.xi < 0.0) {
        double top = p.upper_endpoint();
        if (x > top + 1e-12 * (1.0 + std::fabs(top)))
            throw std::domain_error("gpd_cdf: x beyond upper endpoint");
        if (x >= top) return 1.0;
    }
    return -std::expm1(-std::log1p(p.xi * z) / p.xi);
}

double gpd_quantile(double q, const GpdParams& p) {
    if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("gpd_quantile: q must be in [0,1)");
    if (std::fabs(p.xi) < kGpdXiEps) return p.u - p.sigma * std::log1p(-q);
    return p.u + p.sigma / p.xi * std::expm1(-p.xi * std::log1p(-q));
}

} // namespace evimm
