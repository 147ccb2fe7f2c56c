#pragma once

// Composite distributions: the inlier mixture (point mass at zero + gamma
// bulk + GPD tail with estimated threshold) and the plain bulk/GPD mixture
// baseline without the atom.

#include "evimm/dist.hpp"

#include <map>
#include <string>

namespace evimm {

struct EvimmParams {
    double alpha;     // point mass at zero, in (0, 1)
    GammaParams bulk; // gamma bulk on (0, u)
    double u;         // threshold
    double xi;        // GPD shape
    double sigma;     // GPD scale

    EvimmParams(double alpha_, GammaParams bulk_, double u_, double xi_, double sigma_)
        : alpha(alpha_), bulk(bulk_), u(u_), xi(xi_), sigma(sigma_) {
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw std::invalid_argument("EvimmParams: alpha must be in (0,1)");
        if (!(u > 0.0)) throw std::invalid_argument("EvimmParams: threshold must be positive");
        if (!(sigma > 0.0)) throw std::invalid_argument("EvimmParams: sigma must be positive");
    }

    // F(u-) = alpha + (1-alpha) G*(u): total mass at or below the threshold
    // contributed by the atom and the bulk.
    double cdf_below_u() const { return alpha + (1.0 - alpha) * gamma_cdf(u, bulk); }
    GpdParams tail() const { return GpdParams(xi, sigma, u); }
};

enum class TailFractionMode { BulkBased, Parameterized };

struct EvmmParams {
    GammaParams bulk;
    double u;
    double xi;
    double sigma;
    TailFractionMode mode = TailFractionMode::BulkBased;
    double phi_u = 0.0; // used in Parameterized mode only

    EvmmParams(GammaParams bulk_, double u_, double xi_, double sigma_,
               TailFractionMode mode_ = TailFractionMode::BulkBased, double phi = 0.0)
        : bulk(bulk_), u(u_), xi(xi_), sigma(sigma_), mode(mode_), phi_u(phi) {
        if (!(u > 0.0)) throw std::invalid_argument("EvmmParams: threshold must be positive");
        if (!(sigma > 0.0)) throw std::invalid_argument("EvmmParams: sigma must be positive");
        if (mode == TailFractionMode::Parameterized && (!(phi_u > 0.0) || !(phi_u < 1.0)))
            throw std::invalid_argument("EvmmParams: phi_u must be in (0,1)");
        if (mode == TailFractionMode::BulkBased) phi_u = 1.0 - gamma_cdf(u, bulk);
    }

    double tail_fraction() const { return phi_u; }
    GpdParams tail() const { return GpdParams(xi, sigma, u); }
};

// Value of the mixture density function, distinguishing the atom from the
// absolutely continuous part.
struct MassOrDensity {
    enum Kind { PointMass, Density } kind;
    double value;
};

double evimm_cdf(double x, const EvimmParams& p);
MassOrDensity evimm_mass_density(double x, const EvimmParams& p);
// Generalized inverse inf{x : F(x) >= q}; returns 0 for q <= alpha and u for
// q exactly at F(u-).
double evimm_quantile(double q, const EvimmParams& p);

// P(X > u) = 1 - alpha - (1-alpha) G*(u).
double tail_fraction(const EvimmParams& p);

// Threshold u such that tail_fraction(alpha, bulk, u) == phi.
double threshold_for_tail_fraction(double alpha, const GammaParams& bulk, double phi);

double evmm_cdf(double x, const EvmmParams& p);
double evmm_pdf(double x, const EvmmParams& p);
double evmm_quantile(double q, const EvmmParams& p);

// Flat key-value serialization (keys: model, alpha, eta, beta, u, xi, sigma,
// phi_u when applicable). Round-trips through params_from_doc.
std::map<std::string, std::string> params_to_doc(const EvimmParams& p);
std::map<std::string, std::string> params_to_doc(const EvmmParams& p);
EvimmParams evimm_from_doc(const std::map<std::string, std::string>& doc);
EvmmParams evmm_from_doc(const std::map<std::string, std::string>& doc);

} // namespace evimm
