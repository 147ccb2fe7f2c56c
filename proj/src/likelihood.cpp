#include "evimm/likelihood.hpp"

#include "evimm/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace evimm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sum of log gamma densities over sorted positives [lo, hi) via prefix sums.
double gamma_bulk_sum(const Dataset& d, std::size_t lo, std::size_t hi, const GammaParams& g) {
    double count = static_cast<double>(hi - lo);
    return (g.eta - 1.0) * d.sum_log_positives(lo, hi) - d.sum_positives(lo, hi) / g.beta -
           count * (std::lgamma(g.eta) + g.eta * std::log(g.beta));
}

// Sum of log GPD densities over sorted positives [lo, hi) with threshold u.
// Returns -inf if any point is outside the support.
double gpd_tail_sum(const Dataset& d, std::size_t lo, std::size_t hi, double u, double xi,
                    double sigma) {
    const auto& xs = d.positives();
    double sum = 0.0;
    double count = static_cast<double>(hi - lo);
    if (std::fabs(xi) < kGpdXiEps) {
        for (std::size_t i = lo; i < hi; ++i) sum -= (xs[i] - u) / sigma;
    } else {
        double c = -(1.0 / xi + 1.0);
        for (std::size_t i = lo; i < hi; ++i) {
            double t = xi * (xs[i] - u) / sigma;
            if (t <= -1.0) return kNegInf;
            sum += c * std::log1p(t);
        }
    }
    return sum - count * std::log(sigma);
}

} // namespace

double log_likelihood(const EvimmParams& p, const Dataset& d) {
    const std::size_t npos = d.n_positive();
    const std::size_t n_tail = d.count_tail(p.u);
    const std::size_t k = npos - n_tail; // bulk count
    const double n0 = static_cast<double>(d.n_zero());

    double gu = gamma_cdf(p.u, p.bulk);
    double phi = 1.0 - p.alpha - (1.0 - p.alpha) * gu;
    if (!(phi > 0.0)) return kNegInf;

    double ll = 0.0;
    if (n0 > 0.0) ll += n0 * std::log(p.alpha);
    ll += static_cast<double>(k) * std::log(1.0 - p.alpha);
    ll += gamma_bulk_sum(d, 0, k, p.bulk);
    if (n_tail > 0) {
        ll += static_cast<double>(n_tail) * std::log(phi);
        ll += gpd_tail_sum(d, k, npos, p.u, p.xi, p.sigma);
    }
    return std::isnan(ll) ? kNegInf : ll;
}

double log_likelihood(const EvmmParams& p, const Dataset& d) {
    const std::size_t npos = d.n_positive();
    const std::size_t n_tail = d.count_tail(p.u);
    const std::size_t k = npos - n_tail;

    double hu = gamma_cdf(p.u, p.bulk);
    if (!(hu > 0.0) || !(hu < 1.0)) return kNegInf;

    double ll = gamma_bulk_sum(d, 0, k, p.bulk);
    double phi;
    if (p.mode == TailFractionMode::BulkBased) {
        phi = 1.0 - hu;
    } else {
        phi = p.phi_u;
        if (!(phi > 0.0) || !(phi < 1.0)) return kNegInf;
        ll += static_cast<double>(k) * (std::log1p(-phi) - std::log(hu));
    }
    if (n_tail > 0) {
        ll += static_cast<double>(n_tail) * std::log(phi);
        ll += gpd_tail_sum(d, k, npos, p.u, p.xi, p.sigma);
    }
    return std::isnan(ll) ? kNegInf : ll;
}

double gpd_excess_loglik(double xi, double sigma, std::span<const double> excess) {
    if (!(sigma > 0.0)) return kNegInf;
    double sum = 0.0;
    if (std::fabs(xi) < kGpdXiEps) {
        for (double e : excess) {
            if (e < 0.0) return kNegInf;
            sum -= e / sigma;
        }
    } else {
        double c = -(1.0 / xi + 1.0);
        for (double e : excess) {
            double t = xi * e / sigma;
            if (e < 0.0 || t <= -1.0) return kNegInf;
            sum += c * std::log1p(t);
        }
    }
    return sum - static_cast<double>(excess.size()) * std::log(sigma);
}

} // namespace evimm
