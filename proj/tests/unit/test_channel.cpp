#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dscdma/channel.hpp"

using namespace dscdma;

namespace {

NetworkRealization two_point(double d0, double d1)
{
    NetworkRealization r;
    r.receiver = {0.0, 0.0};
    r.reference_tx = {d0, 0.0};
    r.interferers = {{0.0, d1}};
    r.active = {true};
    return r;
}

}  // namespace

TEST_CASE("path gain")
{
    CHECK(path_gain(2.0, 1.0, 2.0) == doctest::Approx(0.25));
    CHECK(path_gain(0.5, 1.0, 3.0, true) == 1.0);
    CHECK(path_gain(0.5, 1.0, 3.0, false) == doctest::Approx(8.0));
    CHECK_THROWS_AS(path_gain(0.0, 1.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(path_gain(1.0, 0.0, 3.0), std::domain_error);
}

TEST_CASE("chip factor")
{
    CHECK(chip_factor(0.0) == 1.0);
    CHECK(chip_factor(1.0) == 1.0);
    CHECK(chip_factor(0.5) == 0.5);
    CHECK_THROWS_AS(chip_factor(1.5), std::domain_error);
    CHECK_THROWS_AS(chip_factor(-0.1), std::domain_error);
}

TEST_CASE("random chip offsets give G / h(u) between G and 2G")
{
    ChannelParams c;
    c.chip_mode = ChipMode::RandomOffset;
    c.processing_gain = 32.0;
    Engine rng = make_stream(1, 0, StreamPurpose::ChipOffset);
    for (int i = 0; i < 1000; ++i) {
        const double g = effective_gain(c, rng);
        CHECK(g >= 32.0);
        CHECK(g <= 64.0);
    }
}

TEST_CASE("unshadowed normalized powers")
{
    ChannelParams c;
    c.alpha = 3.5;
    c.effective_gain = 48.0;
    const auto pw = normalized_powers_unshadowed(two_point(1.0 / 6.0, 0.5), c, 0.5);
    CHECK(pw.omega0 == doctest::Approx(std::pow(6.0, 3.5)).epsilon(1e-12));
    CHECK(pw.omega0 == doctest::Approx(529.0897).epsilon(1e-6));
    REQUIRE(pw.interferers.size() == 1);
    CHECK(pw.interferers[0].omega == doctest::Approx(std::pow(2.0, 3.5) / 48.0).epsilon(1e-12));
    CHECK(pw.interferers[0].omega == doctest::Approx(0.2357).epsilon(1e-4));
    CHECK(pw.interferers[0].p == 0.5);
}

TEST_CASE("deactivated interferers get p = 0")
{
    auto r = two_point(0.2, 0.5);
    r.active = {false};
    const auto pw = normalized_powers_unshadowed(r, ChannelParams{}, 0.5);
    CHECK(pw.interferers[0].p == 0.0);
}

TEST_CASE("zero shadowing reproduces the unshadowed powers")
{
    ChannelParams c;
    c.sigma_s_db = 0.0;
    Engine rng = make_stream(1, 0, StreamPurpose::Shadowing);
    const auto a = normalized_powers(two_point(0.2, 0.5), c, 0.5, rng);
    const auto b = normalized_powers_unshadowed(two_point(0.2, 0.5), c, 0.5);
    CHECK(a.omega0 == b.omega0);
    CHECK(a.interferers[0].omega == b.interferers[0].omega);
}

TEST_CASE("shadowing parameter reading")
{
    ChannelParams c;
    c.sigma_s_db = 9.0;
    c.shadowing_parameter = ShadowingParameter::Variance;
    CHECK(c.shadowing_std_db() == 3.0);
    c.shadowing_parameter = ShadowingParameter::StdDev;
    CHECK(c.shadowing_std_db() == 9.0);
}

TEST_CASE("shadowing factors have the configured spread")
{
    ChannelParams c;
    c.sigma_s_db = 8.0;
    c.shadowing_parameter = ShadowingParameter::StdDev;
    Engine rng = make_stream(4, 0, StreamPurpose::Shadowing);
    double s = 0.0, s2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double xi = 10.0 * std::log10(normalized_powers(two_point(1.0, 0.5), c, 1.0, rng).omega0);
        s += xi;
        s2 += xi * xi;
    }
    const double mean = s / n;
    CHECK(std::abs(mean) < 0.25);
    CHECK(std::sqrt(s2 / n - mean * mean) == doctest::Approx(8.0).epsilon(0.03));
}

TEST_CASE("inverse SNR")
{
    ChannelParams c;
    c.alpha = 3.0;
    c.snr_reference = SnrReference::UnitDistance;
    CHECK(inverse_snr(c, 10.0, 0.5) == doctest::Approx(0.1));
    c.snr_reference = SnrReference::ReferenceLink;
    CHECK(inverse_snr(c, 10.0, 0.5) == doctest::Approx(0.8));
}

TEST_CASE("channel validation")
{
    ChannelParams c;
    c.m0 = 0;
    CHECK_THROWS(c.validate());
    c = ChannelParams{};
    c.effective_gain = 0.5;
    CHECK_THROWS(c.validate());
}

TEST_CASE("interferer at the receiver is a domain error")
{
    CHECK_THROWS_AS(normalized_powers_unshadowed(two_point(0.2, 0.0), ChannelParams{}, 0.5),
                    std::domain_error);
}
