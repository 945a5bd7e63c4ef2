#include "dscdma/outage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dscdma/error.hpp"

namespace dscdma {

namespace {

constexpr double kRangeSlack = 1e-9;

}  // namespace

std::vector<double> g_coefficients(double omega, double m, double p, double beta0, int ell_max)
{
    std::vector<double> g(static_cast<std::size_t>(ell_max) + 1, 0.0);
    const double psi = 1.0 / (beta0 * omega / m + 1.0);
    g[0] = 1.0 - p * (1.0 - std::pow(psi, m));
    if (p == 0.0 || omega == 0.0) return g;

    const double ratio = omega / m;
    double c = 1.0;                      // Gamma(l+m) / (l! Gamma(m))
    double term = p * std::pow(psi, m);  // p (omega/m)^l psi^(m+l)
    for (int l = 1; l <= ell_max; ++l) {
        c *= (l - 1 + m) / l;
        term *= ratio * psi;
        g[static_cast<std::size_t>(l)] = c * term;
    }
    return g;
}

std::vector<double> h_coefficients(std::span<const std::vector<double>> g, int t_max)
{
    const auto n = static_cast<std::size_t>(t_max) + 1;
    std::vector<double> h(n, 0.0);
    h[0] = 1.0;
    std::vector<double> next(n);
    for (const auto& factor : g) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t top = std::min(t, factor.size() - 1);
            for (std::size_t l = 0; l <= top; ++l) next[t] += h[t - l] * factor[l];
        }
        h.swap(next);
    }
    return h;
}

ConditionalOutage::ConditionalOutage(const NormalizedPowers& powers, double beta, int m0)
    : m0_(m0), beta0_(beta * m0 / powers.omega0)
{
    if (m0 < 1) throw ValidationError("m0 must be a positive integer");
    if (!(beta > 0.0)) throw ValidationError("beta must be positive");
    powers.validate();

    const int t_max = m0 - 1;
    std::vector<std::vector<double>> g;
    g.reserve(powers.interferers.size());
    for (const auto& i : powers.interferers) {
        if (i.p == 0.0 || i.omega == 0.0) continue;  // factor is exactly 1
        g.push_back(g_coefficients(i.omega, i.m, i.p, beta0_, t_max));
    }
    h_ = h_coefficients(g, t_max);
}

double ConditionalOutage::ccdf(double z) const
{
    if (!(z >= 0.0)) throw ValidationError("gamma_inv must be nonnegative");
    if (beta0_ * z > 745.0) return 0.0;  // exp underflows before the polynomial matters

    // sum_s beta0^s sum_t z^(s-t) H_t / (s-t)!
    double total = 0.0;
    double beta_pow = 1.0;
    for (int s = 0; s < m0_; ++s) {
        double inner = 0.0;
        double z_pow = 1.0;  // z^(s-t), built from t = s downward
        double fact = 1.0;   // (s-t)!
        for (int t = s; t >= 0; --t) {
            inner += z_pow * h_[static_cast<std::size_t>(t)] / fact;
            z_pow *= z;
            fact *= static_cast<double>(s - t + 1);
        }
        total += beta_pow * inner;
        beta_pow *= beta0_;
    }
    const double value = std::exp(-beta0_ * z) * total;
    if (!(value >= -kRangeSlack && value <= 1.0 + kRangeSlack)) {
        throw NumericalFailure("ccdf of Z evaluated to " + std::to_string(value) +
                               ", outside [0, 1]");
    }
    return std::clamp(value, 0.0, 1.0);
}

double ccdf_z(const OutageInputs& inputs)
{
    return ConditionalOutage(inputs.powers, inputs.beta, inputs.m0).ccdf(inputs.gamma_inv);
}

double conditional_outage(const OutageInputs& inputs)
{
    return 1.0 - ccdf_z(inputs);
}

}  // namespace dscdma
