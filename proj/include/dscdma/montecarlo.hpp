#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dscdma/channel.hpp"
#include "dscdma/geometry.hpp"

namespace dscdma {

enum class ReceiverLocation { Center, Perimeter };

/// What counts toward the density lambda of active transmitters.
enum class LambdaMode {
    Weighted,     ///< X0 with weight 1, each active interferer with weight p
    Count,        ///< X0 plus active interferers, unweighted
    Interferers,  ///< active interferers only, unweighted
};

struct ExperimentSpec {
    NetworkScenario scenario;
    ChannelParams channel;
    std::vector<double> gamma_db{0.0, 5.0, 10.0, 15.0, 20.0, 25.0};
    std::size_t realizations = 10'000;
    std::uint64_t seed = 1;
    ReceiverLocation location = ReceiverLocation::Center;
    PerimeterDirection perimeter_direction = PerimeterDirection::Outward;
    LambdaMode lambda_mode = LambdaMode::Weighted;
    unsigned threads = 0;  ///< 0 = hardware concurrency

    /// Scenario with receiver and X0 placed per `location`.
    NetworkScenario resolved_scenario() const;

    void validate() const;

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

std::string_view to_string(LambdaMode mode) noexcept;

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};

struct GridPoint {
    double gamma_db = 0.0;
    Estimate outage;
    Estimate tc;  ///< normalized transmission capacity tau / b
};

struct SpatialAverage {
    std::vector<GridPoint> points;
    Estimate active_interferers;  ///< surviving interferers per realization
    Estimate density;             ///< lambda
    LambdaMode lambda_mode = LambdaMode::Weighted;
};

/// Everything sampled for one realization index.
struct RealizationSample {
    NetworkRealization placed;   ///< before CSMA thinning
    NetworkRealization thinned;
    NormalizedPowers powers;
};

/// Deterministic in (seed, index). Placement and the channel draws (shadowing,
/// then chip offsets) come from separate substreams of the master seed.
RealizationSample sample_realization(const ExperimentSpec& spec, std::size_t index);

/// Mean conditional outage over random geometries and shadowing, per Gamma.
SpatialAverage spatial_average_outage(const ExperimentSpec& spec);

/// tau/b = (1 - eps) lambda per realization, averaged; outage is filled too.
SpatialAverage transmission_capacity(const ExperimentSpec& spec);

enum class SweepParameter { TxDistance, GuardRadius, ExclusionRadius, Mobiles, Gamma };

std::string_view to_string(SweepParameter parameter) noexcept;

struct SweepRow {
    double value = 0.0;
    SpatialAverage result;
};

struct SweepTable {
    SweepParameter parameter = SweepParameter::GuardRadius;
    std::vector<SweepRow> rows;
};

/// Spec with one parameter replaced; Gamma replaces the whole grid.
ExperimentSpec with_parameter(ExperimentSpec spec, SweepParameter parameter, double value);

/// Runs the estimator once per value. Every run uses the same master seed, so
/// realization i draws from the same substreams in every row.
SweepTable sweep(const ExperimentSpec& spec, SweepParameter parameter,
                 std::span<const double> values);

/// Pairwise (cascade) summation; the result depends only on the order of
/// `values`, not on how the work producing them was scheduled.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace dscdma
