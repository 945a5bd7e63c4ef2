#include <doctest.h>

#include <cmath>

#include "dscdma/error.hpp"
#include "dscdma/oracle.hpp"
#include "dscdma/outage.hpp"

using namespace dscdma;

TEST_CASE("Nakagami power gain has unit mean and variance 1/m")
{
    Engine rng = make_stream(1, 0, StreamPurpose::Oracle);
    const double m = 2.0;
    double s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double g = nakagami_power_gain(m, rng);
        s += g;
        s2 += g * g;
    }
    CHECK(s / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(s2 / n - (s / n) * (s / n) == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("oracle is fixed for a given seed and worker count")
{
    const NormalizedPowers pw{1.0, {{0.3, 1.0, 0.5}}};
    const auto a = simulate_outage(pw, 2, 1.0, 0.1, 20000, 9, 3);
    const auto b = simulate_outage(pw, 2, 1.0, 0.1, 20000, 9, 3);
    CHECK(a.estimate == b.estimate);
    CHECK(a.trials == 20000);
}

TEST_CASE("oracle agrees with the closed form")
{
    const NormalizedPowers pw{1.0, {{0.4, 1.0, 0.5}, {0.2, 3.5, 1.0}, {0.05, 2.0, 0.3}}};
    const double exact = conditional_outage({pw, 1.0, 2, 0.1});
    const auto sim = simulate_outage(pw, 2, 1.0, 0.1, 400000, 11, 2);
    CHECK(sim.covers(exact));
    CHECK(sim.ci99_halfwidth ==
          doctest::Approx(2.5758293035489004 *
                          std::sqrt(sim.estimate * (1 - sim.estimate) / 400000.0)));
}

TEST_CASE("oracle input validation")
{
    const NormalizedPowers pw{1.0, {}};
    CHECK_THROWS_AS(simulate_outage(pw, 1, 1.0, 0.1, 0, 1), ValidationError);
    CHECK_THROWS_AS(simulate_outage(pw, 0.0, 1.0, 0.1, 10, 1), ValidationError);
}
