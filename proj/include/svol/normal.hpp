#pragma once

namespace svol {

// Standard normal density.
double normal_pdf(double x);

// Standard normal CDF, evaluated through erfc so that both tails keep full
// relative accuracy (absolute error below 1e-15).
double normal_cdf(double x);

// 1 - Phi(x), accurate in the far right tail.
double normal_cdf_complement(double x);

// Inverse of normal_cdf for p in (0,1). Wichura's PPND16 algorithm
// (AS 241), accurate to roughly one ulp.
double inverse_normal_cdf(double p);

} // namespace svol
