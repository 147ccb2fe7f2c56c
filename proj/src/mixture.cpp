#include "evimm/mixture.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace evimm {

double evimm_cdf(double x, const EvimmParams& p) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return p.alpha;
    if (x < p.u) return p.alpha + (1.0 - p.alpha) * gamma_cdf(x, p.bulk);
    double fu = p.cdf_below_u();
    double gx = gpd_cdf(std::min(x, p.tail().upper_endpoint()), p.tail());
    return fu + (1.0 - fu) * gx;
}

MassOrDensity evimm_mass_density(double x, const EvimmParams& p) {
    if (x < 0.0) throw std::domain_error("evimm_mass_density: x must be nonnegative");
    if (x == 0.0) return {MassOrDensity::PointMass, p.alpha};
    if (x < p.u) return {MassOrDensity::Density, (1.0 - p.alpha) * gamma_pdf(x, p.bulk)};
    double phi = 1.0 - p.cdf_below_u();
    return {MassOrDensity::Density, phi * gpd_pdf(x, p.tail())};
}

double evimm_quantile(double q, const EvimmParams& p) {
    if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("evimm_quantile: q must be in [0,1)");
    if (q <= p.alpha) return 0.0;
    double fu = p.cdf_below_u();
    if (q < fu) return gamma_quantile((q - p.alpha) / (1.0 - p.alpha), p.bulk);
    if (q == fu) return p.u;
    return gpd_quantile((q - fu) / (1.0 - fu), p.tail());
}

double tail_fraction(const EvimmParams& p) {
    return 1.0 - p.alpha - (1.0 - p.alpha) * gamma_cdf(p.u, p.bulk);
}

double threshold_for_tail_fraction(double alpha, const GammaParams& bulk, double phi) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::domain_error("threshold_for_tail_fraction: alpha must be in [0,1)");
    if (!(phi > 0.0) || !(phi < 1.0 - alpha))
        throw std::domain_error("threshold_for_tail_fraction: need 0 < phi < 1 - alpha");
    return gamma_quantile((1.0 - alpha - phi) / (1.0 - alpha), bulk);
}

double evmm_cdf(double x, const EvmmParams& p) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return 0.0;
    double hu = gamma_cdf(p.u, p.bulk);
    if (x < p.u) {
        double hx = gamma_cdf(x, p.bulk);
        if (p.mode == TailFractionMode::BulkBased) return hx;
        return (1.0 - p.phi_u) * hx / hu;
    }
    double below = 1.0 - p.tail_fraction();
    double gx = gpd_cdf(std::min(x, p.tail().upper_endpoint()), p.tail());
    return below + p.tail_fraction() * gx;
}

double evmm_pdf(double x, const EvmmParams& p) {
    if (!(x > 0.0)) throw std::domain_error("evmm_pdf: x must be positive");
    if (x < p.u) {
        double g = gamma_pdf(x, p.bulk);
        if (p.mode == TailFractionMode::BulkBased) return g;
        // MacDonald-style rescale keeps total mass 1 in Parameterized mode.
        return (1.0 - p.phi_u) * g / gamma_cdf(p.u, p.bulk);
    }
    return p.tail_fraction() * gpd_pdf(x, p.tail());
}

double evmm_quantile(double q, const EvmmParams& p) {
    if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("evmm_quantile: q must be in [0,1)");
    if (q == 0.0) return 0.0;
    double below = 1.0 - p.tail_fraction();
    if (q < below) {
        double hu = gamma_cdf(p.u, p.bulk);
        double target = (p.mode == TailFractionMode::BulkBased) ? q : q * hu / (1.0 - p.phi_u);
        return gamma_quantile(target, p.bulk);
    }
    if (q == below) return p.u;
    return gpd_quantile((q - below) / p.tail_fraction(), p.tail());
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double get_num(const std::map<std::string, std::string>& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw std::invalid_argument("params doc missing key: " + key);
    return std::stod(it->second);
}

} // namespace

std::map<std::string, std::string> params_to_doc(const EvimmParams& p) {
    return {{"model", "evimm"},        {"alpha", fmt17(p.alpha)}, {"eta", fmt17(p.bulk.eta)},
            {"beta", fmt17(p.bulk.beta)}, {"u", fmt17(p.u)},      {"xi", fmt17(p.xi)},
            {"sigma", fmt17(p.sigma)}};
}

std::map<std::string, std::string> params_to_doc(const EvmmParams& p) {
    std::map<std::string, std::string> doc{
        {"model", p.mode == TailFractionMode::BulkBased ? "evmm-bulk" : "evmm-param"},
        {"eta", fmt17(p.bulk.eta)},
        {"beta", fmt17(p.bulk.beta)},
        {"u", fmt17(p.u)},
        {"xi", fmt17(p.xi)},
        {"sigma", fmt17(p.sigma)}};
    if (p.mode == TailFractionMode::Parameterized) doc["phi_u"] = fmt17(p.phi_u);
    return doc;
}

EvimmParams evimm_from_doc(const std::map<std::string, std::string>& doc) {
    auto it = doc.find("model");
    if (it != doc.end() && it->second != "evimm")
        throw std::invalid_argument("evimm_from_doc: model is not evimm");
    return EvimmParams(get_num(doc, "alpha"),
                       GammaParams(get_num(doc, "eta"), get_num(doc, "beta")),
                       get_num(doc, "u"), get_num(doc, "xi"), get_num(doc, "sigma"));
}

EvmmParams evmm_from_doc(const std::map<std::string, std::string>& doc) {
    auto it = doc.find("model");
    TailFractionMode mode = TailFractionMode::BulkBased;
    if (it != doc.end()) {
        if (it->second == "evmm-param") mode = TailFractionMode::Parameterized;
        else if (it->second != "evmm-bulk")
            throw std::invalid_argument("evmm_from_doc: model is not an evmm variant");
    }
    GammaParams bulk(get_num(doc, "eta"), get_num(doc, "beta"));
    double phi = (mode == TailFractionMode::Parameterized) ? get_num(doc, "phi_u") : 0.0;
    return EvmmParams(bulk, get_num(doc, "u"), get_num(doc, "xi"), get_num(doc, "sigma"), mode,
                      phi);
}

} // namespace evimm
