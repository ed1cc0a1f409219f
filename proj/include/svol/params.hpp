#pragma once

#include <vector>

namespace svol {

// The four primitive model parameters. Volatility decays like
// (t - last shock)^(D - 1/2) between Poisson shocks of intensity lambda;
// V is the large-time volatility and tau0 < 0 places the last shock before
// time zero, which fixes the initial volatility.
struct ModelParams {
    double D = 0.0;      // decay exponent, 0 < D < 1/2
    double V = 0.0;      // large-time volatility, per sqrt(time unit)
    double lambda = 0.0; // shock intensity, per time unit
    double tau0 = 0.0;   // last shock before time zero, strictly negative

    void validate() const;
};

// Closed-form constants derived once from ModelParams. D, lambda and tau0
// are carried along so consumers need a single bundle.
struct DerivedConstants {
    double D = 0.0;
    double lambda = 0.0;
    double tau0 = 0.0;
    double c_sf = 0.0;     // volatility scale: lambda^(D-1/2) V / sqrt(Gamma(2D+1))
    double sigma0 = 0.0;   // initial volatility: c_sf sqrt(2D) (-tau0)^(D-1/2)
    double C_sf = 0.0;     // large-strike tail constant
    double C_tilde = 0.0;  // exponential-moment growth constant
    double ou_c = 0.0;     // mean-reversion coefficient of the OU comparator
    double ou_gamma = 0.0; // its reversion exponent, (2-2D)/(1-2D) > 2
};

DerivedConstants derive_constants(const ModelParams& params);

// Inverts the sigma0 formula: given the initial volatility and the other
// three parameters, returns the (negative) tau0 that produces it.
double sigma0_to_tau0(double sigma0, double D, double V, double lambda);

// Convenience constructor for the sigma0 parameterization.
ModelParams params_from_sigma0(double D, double V, double lambda, double sigma0);

// One realization of the Poisson shock times on [0, horizon].
struct JumpTimes {
    double horizon = 0.0;
    std::vector<double> times; // strictly increasing, all in (0, horizon]

    void validate() const;
};

// A (log-strike, maturity) query. Negative kappa is legal here; pricing and
// asymptotics canonicalize through the smile symmetry before computing.
struct QueryPoint {
    double kappa = 0.0;
    double t = 0.0;

    double abs_kappa() const { return kappa < 0.0 ? -kappa : kappa; }
    void validate() const;
};

} // namespace svol
