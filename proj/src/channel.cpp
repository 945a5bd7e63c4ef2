#include "dscdma/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dscdma/error.hpp"

namespace dscdma {

double ChannelParams::shadowing_std_db() const noexcept
{
    return shadowing_parameter == ShadowingParameter::Variance ? std::sqrt(sigma_s_db)
                                                               : sigma_s_db;
}

double ChannelParams::beta() const noexcept
{
    return db_to_linear(beta_db);
}

void ChannelParams::validate() const
{
    if (!(alpha >= 2.0)) throw ValidationError("alpha must be at least 2");
    if (!(sigma_s_db >= 0.0)) throw ValidationError("sigma_s_db must be nonnegative");
    if (m0 < 1) throw ValidationError("m0 must be a positive integer");
    if (!(m_i > 0.0)) throw ValidationError("m_i must be positive");
    if (!(power_ratio > 0.0)) throw ValidationError("power ratio must be positive");
    if (!std::isfinite(beta_db)) throw ValidationError("beta_db must be finite");
    if (!(reference_distance > 0.0)) throw ValidationError("d0 must be positive");
    if (chip_mode == ChipMode::ConstantEffectiveGain && !(effective_gain >= 1.0))
        throw ValidationError("G_e must be at least 1");
    if (chip_mode == ChipMode::RandomOffset && !(processing_gain >= 1.0))
        throw ValidationError("G must be at least 1");
}

void NormalizedPowers::validate() const
{
    if (!(omega0 > 0.0)) throw ValidationError("omega0 must be positive");
    for (const auto& i : interferers) {
        if (!(i.omega >= 0.0)) throw ValidationError("interferer omega must be nonnegative");
        if (!(i.m > 0.0)) throw ValidationError("interferer Nakagami m must be positive");
        if (!(i.p >= 0.0 && i.p <= 1.0))
            throw ValidationError("interferer activity probability must lie in [0, 1]");
    }
}

double path_gain(double d, double d0, double alpha, bool clamp)
{
    if (!(d > 0.0) || !(d0 > 0.0)) throw std::domain_error("path_gain needs positive distances");
    if (clamp && d < d0) return 1.0;
    return std::pow(d / d0, -alpha);
}

double chip_factor(double u)
{
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("chip offset must lie in [0, 1]");
    return (1.0 - u) * (1.0 - u) + u * u;
}

double effective_gain(const ChannelParams& params, Engine& rng)
{
    if (params.chip_mode == ChipMode::ConstantEffectiveGain) return params.effective_gain;
    return params.processing_gain / chip_factor(uniform01(rng));
}

namespace {

// d0^-alpha * (d/d0)^-alpha, which is d^-alpha unless the clamp engages.
double received_gain(double d, const ChannelParams& params)
{
    const double d0 = params.reference_distance;
    return std::pow(d0, -params.alpha) *
           path_gain(d, d0, params.alpha, params.clamp_near_field);
}

NormalizedPowers build(const NetworkRealization& realization, const ChannelParams& params,
                       double p_active, const std::vector<double>& xi,
                       const std::vector<double>& gains)
{
    const double d_tx = distance(realization.reference_tx, realization.receiver);
    if (!(d_tx > 0.0)) throw std::domain_error("reference transmitter coincides with receiver");

    NormalizedPowers out;
    out.omega0 = db_to_linear(xi[0]) * received_gain(d_tx, params);
    out.interferers.reserve(realization.interferers.size());
    for (std::size_t i = 0; i < realization.interferers.size(); ++i) {
        const double d = distance(realization.interferers[i], realization.receiver);
        if (!(d > 0.0)) throw std::domain_error("interferer coincides with receiver");
        const double omega =
            params.power_ratio / gains[i] * db_to_linear(xi[i + 1]) * received_gain(d, params);
        out.interferers.push_back({omega, params.m_i, realization.active[i] ? p_active : 0.0});
    }
    return out;
}

}  // namespace

NormalizedPowers normalized_powers(const NetworkRealization& realization,
                                   const ChannelParams& params, double p_active, Engine& rng)
{
    const std::size_t m = realization.interferers.size();
    std::vector<double> xi(m + 1, 0.0);
    const double sd = params.shadowing_std_db();
    if (sd > 0.0) {
        std::normal_distribution<double> shadow(0.0, sd);
        for (double& x : xi) x = shadow(rng);
    }
    std::vector<double> gains(m);
    for (double& g : gains) g = effective_gain(params, rng);
    return build(realization, params, p_active, xi, gains);
}

NormalizedPowers normalized_powers_unshadowed(const NetworkRealization& realization,
                                              const ChannelParams& params, double p_active)
{
    const std::size_t m = realization.interferers.size();
    std::vector<double> xi(m + 1, 0.0);
    const double g = params.chip_mode == ChipMode::ConstantEffectiveGain
                         ? params.effective_gain
                         : params.processing_gain * 1.5;
    std::vector<double> gains(m, g);
    return build(realization, params, p_active, xi, gains);
}

double inverse_snr(const ChannelParams& params, double gamma_db, double tx_distance)
{
    const double z = 1.0 / db_to_linear(gamma_db);
    if (params.snr_reference == SnrReference::UnitDistance) return z;
    return z * received_gain(tx_distance, params);
}

}  // namespace dscdma
