#pragma once

#include <cstdint>

#include "dscdma/channel.hpp"
#include "dscdma/random.hpp"

namespace dscdma {

struct OracleResult {
    double estimate = 0.0;
    std::uint64_t trials = 0;
    double ci99_halfwidth = 0.0;  ///< normal approximation; poor below ~1e-4

    bool covers(double value) const noexcept
    {
        return value >= estimate - ci99_halfwidth && value <= estimate + ci99_halfwidth;
    }
};

/// Unit-mean Nakagami-m power gain: a gamma variate with shape m, scale 1/m.
double nakagami_power_gain(double m, Engine& rng);

/// Brute-force estimate of P[SINR <= beta | Omega] by drawing fading gains
/// and activity indicators directly.
///
/// Trials are split into `workers` contiguous shares, each with its own
/// substream of `seed`; the result is fixed for a given (seed, workers).
OracleResult simulate_outage(const NormalizedPowers& powers, double m0, double beta,
                             double gamma_inv, std::uint64_t trials, std::uint64_t seed,
                             unsigned workers = 1);

}  // namespace dscdma
