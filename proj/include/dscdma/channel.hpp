#pragma once

#include <cmath>
#include <vector>

#include "dscdma/geometry.hpp"
#include "dscdma/random.hpp"

namespace dscdma {

inline double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

enum class ChipMode {
    ConstantEffectiveGain,  ///< G_i = G_e for every interferer
    RandomOffset,           ///< G_i = G / h(u), u ~ U[0,1] per interferer
};

/// How `sigma_s_db` is read when drawing the shadowing factors xi.
enum class ShadowingParameter {
    StdDev,    ///< xi ~ N(0, sigma_s^2)
    Variance,  ///< xi ~ N(0, sigma_s); matches the reference outage table
};

/// Distance at which Gamma is quoted.
enum class SnrReference {
    UnitDistance,   ///< Gamma is the SNR of a unit-distance link
    ReferenceLink,  ///< Gamma is the SNR of the reference link at ||X0||
};

struct ChannelParams {
    double alpha = 3.5;
    double sigma_s_db = 8.0;
    ShadowingParameter shadowing_parameter = ShadowingParameter::Variance;
    double beta_db = 0.0;
    int m0 = 3;
    double m_i = 1.0;
    double processing_gain = 32.0;  ///< G, used in random-offset mode
    double effective_gain = 48.0;   ///< G_e, used in constant mode
    ChipMode chip_mode = ChipMode::ConstantEffectiveGain;
    double power_ratio = 1.0;  ///< P_i / P_0
    SnrReference snr_reference = SnrReference::ReferenceLink;
    double reference_distance = 1.0 / 12.0;  ///< d0; only matters with the clamp on
    bool clamp_near_field = false;

    double shadowing_std_db() const noexcept;
    double beta() const noexcept;  ///< linear SINR threshold

    void validate() const;

    friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct InterfererPower {
    double omega = 0.0;  ///< normalized power
    double m = 1.0;      ///< Nakagami parameter
    double p = 1.0;      ///< probability of transmitting in the slot
};

/// The sufficient statistic for the closed-form outage.
struct NormalizedPowers {
    double omega0 = 1.0;
    std::vector<InterfererPower> interferers;

    void validate() const;
};

/// (d/d0)^-alpha. With `clamp` set the gain saturates at 1 for d < d0.
double path_gain(double d, double d0, double alpha, bool clamp = false);

/// Despread interference attenuation of a rectangular chip at normalized
/// offset u = tau / Tc: (1-u)^2 + u^2.
double chip_factor(double u);

double effective_gain(const ChannelParams& params, Engine& rng);

/// Builds Omega for one realization. Draws xi_0, xi_1..xi_M (every placed
/// interferer, active or not) and then, in random-offset mode, one chip
/// offset per interferer, all from `rng`. Deactivated interferers get p = 0.
NormalizedPowers normalized_powers(const NetworkRealization& realization,
                                   const ChannelParams& params, double p_active, Engine& rng);

/// Same as above with every xi fixed at 0 and constant-gain chips.
NormalizedPowers normalized_powers_unshadowed(const NetworkRealization& realization,
                                              const ChannelParams& params, double p_active);

/// Evaluation point z = Gamma^-1 of the outage cdf for an SNR in dB,
/// honoring the configured SNR reference.
double inverse_snr(const ChannelParams& params, double gamma_db, double tx_distance);

}  // namespace dscdma
