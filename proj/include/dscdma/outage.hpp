#pragma once

#include <span>
#include <vector>

#include "dscdma/channel.hpp"

namespace dscdma {

/// Inputs of one conditional-outage evaluation.
struct OutageInputs {
    NormalizedPowers powers;
    double beta = 1.0;       ///< linear SINR threshold
    int m0 = 1;              ///< integer Nakagami parameter of the desired link
    double gamma_inv = 0.0;  ///< evaluation point z = 1 / Gamma
};

/// Per-interferer coefficients G_0..G_ell_max. The gamma-function ratio
/// Gamma(l+m)/(l! Gamma(m)) is carried by the recurrence c_l = c_{l-1}(l-1+m)/l,
/// so non-integer m is fine.
std::vector<double> g_coefficients(double omega, double m, double p, double beta0, int ell_max);

/// H_0..H_t_max: coefficients of x^t in prod_i sum_l G_{i,l} x^l, truncated
/// at degree t_max. Equivalent to summing over all index sets that add to t.
std::vector<double> h_coefficients(std::span<const std::vector<double>> g, int t_max);

/// Closed-form conditional outage for a fixed Omega.
///
/// The H coefficients do not depend on z, so they are computed once and any
/// number of SNR points can then be evaluated in O(m0^2) each.
class ConditionalOutage {
public:
    ConditionalOutage(const NormalizedPowers& powers, double beta, int m0);

    /// Complementary cdf of Z at z >= 0. The (beta0 z)^s z^-t factor is
    /// evaluated as beta0^s z^(s-t), which stays finite at z = 0.
    /// Throws NumericalFailure if the sum leaves [-1e-9, 1 + 1e-9].
    double ccdf(double z) const;

    /// Outage probability, the cdf of Z at z.
    double outage(double z) const { return 1.0 - ccdf(z); }

    double beta0() const noexcept { return beta0_; }
    std::span<const double> h() const noexcept { return h_; }

private:
    int m0_;
    double beta0_;
    std::vector<double> h_;
};

double ccdf_z(const OutageInputs& inputs);
double conditional_outage(const OutageInputs& inputs);

}  // namespace dscdma
