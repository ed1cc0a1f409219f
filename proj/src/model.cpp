#include "svol/model.hpp"

#include "svol/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace svol {

namespace detail {

double power_increment(double two_d, double a, double w) {
    // (w + a)^p - a^p with p in (0,1); written so the difference survives
    // w/a down to the underflow threshold (a can exceed 1e19 here).
    return std::pow(a, two_d) * std::expm1(two_d * std::log1p(w / a));
}

} // namespace detail

namespace {

// Index of the last jump time <= t, or -1.
std::ptrdiff_t last_jump_index(const std::vector<double>& times, double t) {
    auto it = std::upper_bound(times.begin(), times.end(), t);
    return static_cast<std::ptrdiff_t>(it - times.begin()) - 1;
}

} // namespace

double spot_volatility(const DerivedConstants& consts, const JumpTimes& jumps, double tau0,
                       double t) {
    if (!(t >= 0.0 && t <= jumps.horizon))
        throw std::domain_error("spot_volatility: t outside [0, horizon]");
    const std::ptrdiff_t k = last_jump_index(jumps.times, t);
    const double last = k >= 0 ? jumps.times[static_cast<std::size_t>(k)] : tau0;
    const double age = t - last;
    if (age == 0.0)
        return std::numeric_limits<double>::infinity();
    return consts.c_sf * std::sqrt(2.0 * consts.D) * std::pow(age, consts.D - 0.5);
}

double time_change(const DerivedConstants& consts, const JumpTimes& jumps, double tau0, double t) {
    if (!(t >= 0.0 && t <= jumps.horizon))
        throw std::domain_error("time_change: t outside [0, horizon]");
    const double two_d = 2.0 * consts.D;
    const double c2 = consts.c_sf * consts.c_sf;
    const std::ptrdiff_t k = last_jump_index(jumps.times, t);
    if (k < 0)
        return c2 * detail::power_increment(two_d, -tau0, t);
    double sum = detail::power_increment(two_d, -tau0, jumps.times[0]);
    for (std::ptrdiff_t i = 1; i <= k; ++i)
        sum += std::pow(jumps.times[static_cast<std::size_t>(i)] -
                            jumps.times[static_cast<std::size_t>(i - 1)],
                        two_d);
    sum += std::pow(t - jumps.times[static_cast<std::size_t>(k)], two_d);
    return c2 * sum;
}

std::vector<double> time_change_on_grid(const DerivedConstants& consts, const JumpTimes& jumps,
                                        double tau0, const std::vector<double>& grid) {
    const double two_d = 2.0 * consts.D;
    const double c2 = consts.c_sf * consts.c_sf;
    std::vector<double> out;
    out.reserve(grid.size());
    double completed = 0.0; // sum over inter-arrival gaps fully before the cursor
    std::size_t next = 0;   // first jump index not yet folded into `completed`
    double prev_grid = 0.0;
    for (double t : grid) {
        if (!(t >= prev_grid && t <= jumps.horizon))
            throw std::domain_error("time_change_on_grid: grid must be ascending within horizon");
        prev_grid = t;
        while (next < jumps.times.size() && jumps.times[next] <= t) {
            if (next == 0)
                completed += detail::power_increment(two_d, -tau0, jumps.times[0]);
            else
                completed += std::pow(jumps.times[next] - jumps.times[next - 1], two_d);
            ++next;
        }
        double partial;
        if (next == 0)
            partial = detail::power_increment(two_d, -tau0, t);
        else
            partial = std::pow(t - jumps.times[next - 1], two_d);
        out.push_back(c2 * (completed + partial));
    }
    return out;
}

double it_upper_bound(const DerivedConstants& consts, std::uint64_t n, double t) {
    if (!(t >= 0.0))
        throw std::domain_error("it_upper_bound: t must be non-negative");
    const double c2 = consts.c_sf * consts.c_sf;
    const double nn = static_cast<double>(n);
    return consts.sigma0 * consts.sigma0 * t +
           c2 * std::pow(nn, 1.0 - 2.0 * consts.D) * std::pow(t, 2.0 * consts.D);
}

double mean_sigma_squared(const DerivedConstants& consts, double tau0, double t) {
    if (!(t >= 0.0))
        throw std::domain_error("mean_sigma_squared: t must be non-negative");
    const double D = consts.D;
    const double lam = consts.lambda;
    const double c2 = consts.c_sf * consts.c_sf;
    if (t == 0.0)
        return consts.sigma0 * consts.sigma0;
    // E[(t - last shock)^(2D-1)] splits over {some shock by t} / {none}.
    // The first part is int_0^t y^(2D-1) lambda e^(-lambda y) dy; substituting
    // u = y^(2D) removes the integrable singularity at zero.
    const double two_d = 2.0 * D;
    const double u_hi = std::min(std::pow(t, two_d), std::pow(745.0 / lam, two_d));
    const double integral =
        (lam / two_d) * adaptive_simpson(
                            [lam, two_d](double u) {
                                return std::exp(-lam * std::pow(u, 1.0 / two_d));
                            },
                            0.0, u_hi, 1e-12);
    const double no_shock = std::pow(t - tau0, two_d - 1.0) * std::exp(-lam * t);
    return c2 * two_d * (integral + no_shock);
}

} // namespace svol
