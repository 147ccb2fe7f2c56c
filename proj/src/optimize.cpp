#include "evimm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evimm {

namespace {

double sanitize(double v) {
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const std::size_t dim = x0.size();
    const double rho = 1.0, chi = 2.0, gamma = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> pts(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) {
        double step = (i < opts.initial_step.size()) ? opts.initial_step[i]
                      : (x0[i] != 0.0 ? 0.05 * std::fabs(x0[i]) : 0.05);
        pts[i + 1][i] += step;
    }
    std::vector<double> fv(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) fv[i] = sanitize(f(pts[i]));

    std::vector<std::size_t> order(dim + 1);
    NelderMeadResult res;
    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

        double fbest = fv[order[0]], fworst = fv[order[dim]];
        if (std::isfinite(fworst)) {
            double spread = std::fabs(fworst - fbest);
            if (spread <= opts.f_rel_tol * (std::fabs(fbest) + 1e-12)) {
                res.converged = true;
                break;
            }
        }

        // Centroid of all but the worst point.
        std::vector<double> cen(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) cen[j] += pts[order[i]][j];
        }
        for (double& c : cen) c /= static_cast<double>(dim);

        auto blend = [&](double coef) {
            std::vector<double> p(dim);
            for (std::size_t j = 0; j < dim; ++j)
                p[j] = cen[j] + coef * (cen[j] - pts[order[dim]][j]);
            return p;
        };

        std::vector<double> xr = blend(rho);
        double fr = sanitize(f(xr));
        if (fr < fv[order[0]]) {
            std::vector<double> xe = blend(rho * chi);
            double fe = sanitize(f(xe));
            if (fe < fr) { pts[order[dim]] = std::move(xe); fv[order[dim]] = fe; }
            else { pts[order[dim]] = std::move(xr); fv[order[dim]] = fr; }
        } else if (fr < fv[order[dim - 1]]) {
            pts[order[dim]] = std::move(xr);
            fv[order[dim]] = fr;
        } else {
            bool outside = fr < fv[order[dim]];
            std::vector<double> xc = blend(outside ? rho * gamma : -gamma);
            double fc = sanitize(f(xc));
            if (fc < std::min(fr, fv[order[dim]])) {
                pts[order[dim]] = std::move(xc);
                fv[order[dim]] = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t i = 1; i <= dim; ++i) {
                    auto& p = pts[order[i]];
                    const auto& b = pts[order[0]];
                    for (std::size_t j = 0; j < dim; ++j) p[j] = b[j] + sigma * (p[j] - b[j]);
                    fv[order[i]] = sanitize(f(p));
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.fmin = fv[best];
    res.iterations = iter;
    return res;
}

} // namespace evimm
