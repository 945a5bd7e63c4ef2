#include "dscdma/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "dscdma/error.hpp"
#include "dscdma/outage.hpp"

namespace dscdma {

NetworkScenario ExperimentSpec::resolved_scenario() const
{
    return location == ReceiverLocation::Center
               ? receiver_at_center(scenario)
               : receiver_at_perimeter(scenario, perimeter_direction);
}

void ExperimentSpec::validate() const
{
    if (realizations == 0) throw ValidationError("realizations must be at least 1");
    if (gamma_db.empty()) throw ValidationError("gamma grid must not be empty");
    for (double g : gamma_db)
        if (!std::isfinite(g)) throw ValidationError("gamma values must be finite");
    channel.validate();
    if (location == ReceiverLocation::Perimeter &&
        perimeter_direction == PerimeterDirection::Inward &&
        scenario.tx_distance > 2.0 * scenario.r_net)
        throw ValidationError("tx_distance exceeds the network diameter");
    resolved_scenario().validate();
}

double pairwise_sum(std::span<const double> values) noexcept
{
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

RealizationSample sample_realization(const ExperimentSpec& spec, std::size_t index)
{
    const NetworkScenario scenario = spec.resolved_scenario();
    Engine placement = make_stream(spec.seed, index, StreamPurpose::Placement);
    Engine shadowing = make_stream(spec.seed, index, StreamPurpose::Shadowing);

    RealizationSample s;
    s.placed = place_uniform_clustering(scenario, placement);
    s.thinned = csma_thin(s.placed, scenario.r_g);
    s.powers = normalized_powers(s.thinned, spec.channel, scenario.p_active, shadowing);
    return s;
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = n * t / threads;
        const std::size_t end = n * (t + 1) / threads;
        pool.emplace_back([&, t, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

Estimate summarize(std::span<const double> values)
{
    Estimate e;
    e.count = values.size();
    const double n = static_cast<double>(values.size());
    e.mean = pairwise_sum(values) / n;
    if (values.size() > 1) {
        std::vector<double> dev(values.size());
        std::transform(values.begin(), values.end(), dev.begin(),
                       [&](double v) { return (v - e.mean) * (v - e.mean); });
        e.std_error = std::sqrt(pairwise_sum(dev) / (n - 1.0) / n);
    }
    return e;
}

double density_weight(const NetworkRealization& r, double p, LambdaMode mode)
{
    const auto active = static_cast<double>(r.active_count());
    switch (mode) {
    case LambdaMode::Weighted:
        return 1.0 + p * active;
    case LambdaMode::Count:
        return 1.0 + active;
    case LambdaMode::Interferers:
        return active;
    }
    return 0.0;
}

SpatialAverage evaluate(const ExperimentSpec& spec)
{
    spec.validate();
    const NetworkScenario scenario = spec.resolved_scenario();
    const std::size_t n = spec.realizations;
    const std::size_t grid = spec.gamma_db.size();
    const double area = std::numbers::pi * scenario.r_net * scenario.r_net;

    std::vector<double> z(grid);
    for (std::size_t g = 0; g < grid; ++g)
        z[g] = inverse_snr(spec.channel, spec.gamma_db[g], scenario.tx_distance);

    // Row-major by grid point so each column is contiguous for summation.
    std::vector<double> outage(grid * n);
    std::vector<double> tc(grid * n);
    std::vector<double> active(n);
    std::vector<double> density(n);

    parallel_for(n, spec.threads, [&](std::size_t i) {
        const RealizationSample s = sample_realization(spec, i);
        const ConditionalOutage kernel(s.powers, spec.channel.beta(), spec.channel.m0);
        const double lambda =
            density_weight(s.thinned, scenario.p_active, spec.lambda_mode) / area;
        active[i] = static_cast<double>(s.thinned.active_count());
        density[i] = lambda;
        for (std::size_t g = 0; g < grid; ++g) {
            const double eps = kernel.outage(z[g]);
            outage[g * n + i] = eps;
            tc[g * n + i] = (1.0 - eps) * lambda;
        }
    });

    SpatialAverage out;
    out.lambda_mode = spec.lambda_mode;
    out.active_interferers = summarize(active);
    out.density = summarize(density);
    out.points.reserve(grid);
    const std::span<const double> all_outage(outage);
    const std::span<const double> all_tc(tc);
    for (std::size_t g = 0; g < grid; ++g) {
        out.points.push_back({spec.gamma_db[g], summarize(all_outage.subspan(g * n, n)),
                              summarize(all_tc.subspan(g * n, n))});
    }
    return out;
}

}  // namespace

SpatialAverage spatial_average_outage(const ExperimentSpec& spec)
{
    return evaluate(spec);
}

SpatialAverage transmission_capacity(const ExperimentSpec& spec)
{
    return evaluate(spec);
}

std::string_view to_string(LambdaMode mode) noexcept
{
    switch (mode) {
    case LambdaMode::Weighted:
        return "weighted";
    case LambdaMode::Count:
        return "count";
    case LambdaMode::Interferers:
        return "interferers";
    }
    return "?";
}

std::string_view to_string(SweepParameter parameter) noexcept
{
    switch (parameter) {
    case SweepParameter::TxDistance:
        return "tx_distance";
    case SweepParameter::GuardRadius:
        return "r_g";
    case SweepParameter::ExclusionRadius:
        return "r_ex";
    case SweepParameter::Mobiles:
        return "M";
    case SweepParameter::Gamma:
        return "gamma_db";
    }
    return "?";
}

ExperimentSpec with_parameter(ExperimentSpec spec, SweepParameter parameter, double value)
{
    switch (parameter) {
    case SweepParameter::TxDistance:
        spec.scenario.tx_distance = value;
        break;
    case SweepParameter::GuardRadius:
        spec.scenario.r_g = value;
        break;
    case SweepParameter::ExclusionRadius:
        spec.scenario.r_ex = value;
        break;
    case SweepParameter::Mobiles:
        if (!(value >= 0.0) || value != std::floor(value))
            throw ValidationError("M sweep values must be nonnegative integers");
        spec.scenario.mobiles = static_cast<int>(value);
        break;
    case SweepParameter::Gamma:
        spec.gamma_db = {value};
        break;
    }
    return spec;
}

SweepTable sweep(const ExperimentSpec& spec, SweepParameter parameter,
                 std::span<const double> values)
{
    SweepTable table;
    table.parameter = parameter;
    table.rows.reserve(values.size());
    for (double v : values)
        table.rows.push_back({v, transmission_capacity(with_parameter(spec, parameter, v))});
    return table;
}

}  // namespace dscdma
