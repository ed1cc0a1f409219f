#pragma once

#include "svol/params.hpp"

#include <cstdint>
#include <vector>

namespace svol {

// Spot volatility at time t given the shock realization. Diverges (+inf)
// exactly at shock times.
double spot_volatility(const DerivedConstants& consts, const JumpTimes& jumps, double t);

// Integrated variance I_t in closed form: finite, continuous and
// non-decreasing in t even though the volatility blows up at shocks.
double time_change(const DerivedConstants& consts, const JumpTimes& jumps, double t);

// I_t evaluated at several (ascending) times against one shock realization.
std::vector<double> time_change_on_grid(const DerivedConstants& consts, const JumpTimes& jumps,
                                        const std::vector<double>& grid);

// Deterministic upper bound on I_t given the shock count:
// sigma0^2 t + c_sf^2 n^(1-2D) t^(2D).
double it_upper_bound(const DerivedConstants& consts, std::uint64_t n, double t);

// E[sigma_t^2], exact at t = 0 (sigma0^2) and converging to V^2 as t grows.
// The truncated-exponential moment is done by adaptive quadrature.
double mean_sigma_squared(const DerivedConstants& consts, double t);

namespace detail {
// (w + a)^(2D) - a^(2D), evaluated without cancellation for w << a.
double power_increment(double two_d, double a, double w);
} // namespace detail

} // namespace svol
