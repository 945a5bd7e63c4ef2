#include "dscdma/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dscdma/error.hpp"

namespace dscdma {

double distance(Point a, Point b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

Point NetworkScenario::reference_tx() const noexcept
{
    return {receiver.x + tx_distance * std::cos(tx_bearing),
            receiver.y + tx_distance * std::sin(tx_bearing)};
}

void NetworkScenario::validate() const
{
    if (!(r_net > 0.0)) throw ValidationError("r_net must be positive");
    if (mobiles < 0) throw ValidationError("M must be nonnegative");
    if (!(r_ex >= 0.0 && r_ex < r_net)) throw ValidationError("r_ex must lie in [0, r_net)");
    if (!(r_g >= r_ex)) throw ValidationError("r_g must be at least r_ex");
    if (!(tx_distance > 0.0)) throw ValidationError("tx_distance must be positive");
    if (std::hypot(receiver.x, receiver.y) > r_net * (1.0 + 1e-12))
        throw ValidationError("receiver must lie inside the network disc");
    if (!(p_active >= 0.0 && p_active <= 1.0))
        throw ValidationError("p_active must lie in [0, 1]");
    if (retry_cap == 0) throw ValidationError("retry cap must be positive");
}

std::size_t NetworkRealization::active_count() const noexcept
{
    std::size_t n = 0;
    for (bool a : active) n += a ? 1 : 0;
    return n;
}

namespace {

Point uniform_on_disc(double radius, Engine& rng)
{
    const double r = radius * std::sqrt(uniform01(rng));
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

NetworkRealization place_uniform_clustering(const NetworkScenario& scenario, Engine& rng)
{
    scenario.validate();

    NetworkRealization out;
    out.receiver = scenario.receiver;
    out.reference_tx = scenario.reference_tx();
    out.interferers.reserve(static_cast<std::size_t>(scenario.mobiles));

    const double ex_sq = scenario.r_ex * scenario.r_ex;
    auto clear = [&](Point p) {
        if (distance_sq(p, out.reference_tx) < ex_sq) return false;
        if (scenario.exclusion_around_receiver && distance_sq(p, out.receiver) < ex_sq)
            return false;
        for (const Point& q : out.interferers)
            if (distance_sq(p, q) < ex_sq) return false;
        return true;
    };

    for (int i = 0; i < scenario.mobiles; ++i) {
        std::size_t draws = 0;
        Point p;
        do {
            if (++draws > scenario.retry_cap) {
                throw InfeasiblePacking("could not place mobile " + std::to_string(i + 1) +
                                        " outside all exclusion zones after " +
                                        std::to_string(scenario.retry_cap) + " draws");
            }
            p = uniform_on_disc(scenario.r_net, rng);
        } while (!clear(p));
        out.interferers.push_back(p);
    }
    out.active.assign(out.interferers.size(), true);
    return out;
}

NetworkRealization csma_thin(NetworkRealization realization, double r_g)
{
    const double g_sq = r_g * r_g;
    std::vector<Point> transmitting{realization.reference_tx};
    transmitting.reserve(realization.interferers.size() + 1);
    realization.active.assign(realization.interferers.size(), false);

    for (std::size_t i = 0; i < realization.interferers.size(); ++i) {
        const Point p = realization.interferers[i];
        bool blocked = false;
        for (const Point& q : transmitting) {
            if (distance_sq(p, q) < g_sq) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            realization.active[i] = true;
            transmitting.push_back(p);
        }
    }
    return realization;
}

NetworkScenario receiver_at_perimeter(NetworkScenario scenario, PerimeterDirection direction)
{
    if (!(scenario.tx_distance > 0.0)) throw std::domain_error("tx_distance must be positive");
    if (direction == PerimeterDirection::Inward && scenario.tx_distance > 2.0 * scenario.r_net)
        throw std::domain_error("tx_distance exceeds the network diameter");
    scenario.receiver = {scenario.r_net, 0.0};
    scenario.tx_bearing = direction == PerimeterDirection::Inward ? std::numbers::pi : 0.0;
    return scenario;
}

NetworkScenario receiver_at_center(NetworkScenario scenario)
{
    if (!(scenario.tx_distance > 0.0)) throw std::domain_error("tx_distance must be positive");
    scenario.receiver = {0.0, 0.0};
    scenario.tx_bearing = 0.0;
    return scenario;
}

std::string to_point_list(const NetworkRealization& realization)
{
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "# receiver %.17g %.17g\n", realization.receiver.x,
                  realization.receiver.y);
    out += buf;
    std::snprintf(buf, sizeof buf, "0 %.17g %.17g 1\n", realization.reference_tx.x,
                  realization.reference_tx.y);
    out += buf;
    for (std::size_t i = 0; i < realization.interferers.size(); ++i) {
        const Point p = realization.interferers[i];
        std::snprintf(buf, sizeof buf, "%zu %.17g %.17g %d\n", i + 1, p.x, p.y,
                      realization.active[i] ? 1 : 0);
        out += buf;
    }
    return out;
}

NetworkRealization from_point_list(std::string_view text)
{
    NetworkRealization out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_tx = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (line.front() == '#') {
            std::string hash, tag;
            fields >> hash >> tag;
            if (tag == "receiver") fields >> out.receiver.x >> out.receiver.y;
            continue;
        }
        std::size_t index = 0;
        Point p;
        int flag = 0;
        if (!(fields >> index >> p.x >> p.y >> flag))
            throw std::invalid_argument("malformed point-list line: " + line);
        if (index == 0) {
            out.reference_tx = p;
            have_tx = true;
            continue;
        }
        if (index != out.interferers.size() + 1)
            throw std::invalid_argument("point-list indices must be consecutive");
        out.interferers.push_back(p);
        out.active.push_back(flag != 0);
    }
    if (!have_tx) throw std::invalid_argument("point list has no reference transmitter");
    return out;
}

}  // namespace dscdma
