#include "svol/params.hpp"

#include <cmath>
#include <stdexcept>

namespace svol {

void ModelParams::validate() const {
    if (!(D > 0.0 && D < 0.5))
        throw std::domain_error("ModelParams: D must satisfy 0 < D < 1/2");
    if (!(V > 0.0))
        throw std::domain_error("ModelParams: V must be positive");
    if (!(lambda > 0.0))
        throw std::domain_error("ModelParams: lambda must be positive");
    if (!(tau0 < 0.0))
        throw std::domain_error("ModelParams: tau0 must be negative");
}

DerivedConstants derive_constants(const ModelParams& params) {
    params.validate();
    const double D = params.D;
    DerivedConstants c;
    c.D = D;
    c.lambda = params.lambda;
    c.tau0 = params.tau0;
    c.c_sf = std::pow(params.lambda, D - 0.5) * params.V / std::sqrt(std::tgamma(2.0 * D + 1.0));
    c.sigma0 = c.c_sf * std::sqrt(2.0 * D) * std::pow(-params.tau0, D - 0.5);
    c.C_sf = std::pow(1.0 - D, 0.5 / (1.0 - D)) /
             (std::pow(0.5 - D, (0.5 - D) / (1.0 - D)) * std::pow(c.c_sf, 1.0 / (1.0 - D)));
    c.C_tilde = std::pow(c.c_sf, 1.0 / D) * std::pow(2.0 * D, 0.5 / D) *
                std::pow(1.0 - 2.0 * D, (1.0 - 2.0 * D) / (2.0 * D));
    c.ou_gamma = (2.0 - 2.0 * D) / (1.0 - 2.0 * D);
    c.ou_c = (1.0 - 2.0 * D) / std::pow(2.0 * D * c.c_sf * c.c_sf, 1.0 / (1.0 - 2.0 * D));
    return c;
}

double sigma0_to_tau0(double sigma0, double D, double V, double lambda) {
    if (!(sigma0 > 0.0))
        throw std::domain_error("sigma0_to_tau0: sigma0 must be positive");
    ModelParams probe{D, V, lambda, -1.0};
    probe.validate();
    const double c_sf = std::pow(lambda, D - 0.5) * V / std::sqrt(std::tgamma(2.0 * D + 1.0));
    return -std::pow(sigma0 / (c_sf * std::sqrt(2.0 * D)), 1.0 / (D - 0.5));
}

ModelParams params_from_sigma0(double D, double V, double lambda, double sigma0) {
    ModelParams p{D, V, lambda, sigma0_to_tau0(sigma0, D, V, lambda)};
    p.validate();
    return p;
}

void JumpTimes::validate() const {
    if (!(horizon > 0.0))
        throw std::domain_error("JumpTimes: horizon must be positive");
    double prev = 0.0;
    for (double tk : times) {
        if (!(tk > prev && tk <= horizon))
            throw std::domain_error("JumpTimes: times must be strictly increasing in (0, horizon]");
        prev = tk;
    }
}

void QueryPoint::validate() const {
    if (!(t > 0.0))
        throw std::domain_error("QueryPoint: t must be positive");
}

} // namespace svol
