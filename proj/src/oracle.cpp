#include "dscdma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "dscdma/error.hpp"

namespace dscdma {

namespace {

constexpr double kZ995 = 2.5758293035489004;

std::uint64_t count_outages(const NormalizedPowers& powers, double m0, double beta,
                            double gamma_inv, std::uint64_t trials, Engine rng)
{
    std::gamma_distribution<double> desired(m0, 1.0 / m0);
    std::vector<std::gamma_distribution<double>> fading;
    std::vector<std::bernoulli_distribution> on;
    for (const auto& i : powers.interferers) {
        fading.emplace_back(i.m, 1.0 / i.m);
        on.emplace_back(i.p);
    }

    std::uint64_t outages = 0;
    for (std::uint64_t n = 0; n < trials; ++n) {
        const double signal = desired(rng) * powers.omega0;
        double denom = gamma_inv;
        for (std::size_t k = 0; k < fading.size(); ++k) {
            // Both draws are always taken so the stream layout is fixed.
            const bool active = on[k](rng);
            const double g = fading[k](rng);
            if (active) denom += g * powers.interferers[k].omega;
        }
        if (signal <= beta * denom) ++outages;
    }
    return outages;
}

}  // namespace

double nakagami_power_gain(double m, Engine& rng)
{
    return std::gamma_distribution<double>(m, 1.0 / m)(rng);
}

OracleResult simulate_outage(const NormalizedPowers& powers, double m0, double beta,
                             double gamma_inv, std::uint64_t trials, std::uint64_t seed,
                             unsigned workers)
{
    if (trials == 0) throw ValidationError("oracle needs at least one trial");
    if (!(m0 > 0.0)) throw ValidationError("m0 must be positive");
    powers.validate();
    workers = std::max(1u, workers);

    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::thread> pool;
    const std::uint64_t share = trials / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t n = share + (w < trials % workers ? 1 : 0);
        pool.emplace_back([&, w, n] {
            counts[w] = count_outages(powers, m0, beta, gamma_inv, n,
                                      make_stream(seed, w, StreamPurpose::Oracle));
        });
    }
    for (auto& t : pool) t.join();

    std::uint64_t outages = 0;
    for (auto c : counts) outages += c;
    const double p = static_cast<double>(outages) / static_cast<double>(trials);
    return {p, trials, kZ995 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

}  // namespace dscdma
