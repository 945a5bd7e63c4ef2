#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dscdma/random.hpp"

namespace dscdma {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance_sq(Point a, Point b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double distance(Point a, Point b) noexcept;

/// Where the reference transmitter goes when the receiver sits on the rim.
enum class PerimeterDirection {
    Inward,   ///< toward the network center; X0 stays inside the disc
    Outward,  ///< away from the center, "to the right" of a receiver at (r_net, 0)
};

/// One experiment geometry. Distances are normalized so that r_net = 1 in the
/// reference experiments, but any positive radius works.
struct NetworkScenario {
    double r_net = 1.0;
    int mobiles = 30;  ///< M, potentially interfering mobiles
    double r_ex = 1.0 / 12.0;
    double r_g = 1.0 / 4.0;
    double tx_distance = 1.0 / 6.0;  ///< ||X0||, measured from the receiver
    Point receiver{};
    double tx_bearing = 0.0;  ///< direction receiver -> X0, radians
    double p_active = 0.5;
    bool exclusion_around_receiver = true;
    std::size_t retry_cap = 1'000'000;

    Point reference_tx() const noexcept;

    /// Throws ValidationError naming the violated constraint.
    void validate() const;

    friend bool operator==(const NetworkScenario&, const NetworkScenario&) = default;
};

/// A sampled geometry. Interferers keep their placement order; `active` is
/// parallel to `interferers`.
struct NetworkRealization {
    Point receiver{};
    Point reference_tx{};
    std::vector<Point> interferers;
    std::vector<bool> active;

    std::size_t active_count() const noexcept;
};

/// Uniform clustering: each interferer is drawn uniformly on the disc and
/// redrawn until it clears the exclusion zone of X0, of every previously
/// placed interferer and, when enabled, of the receiver.
///
/// Throws InfeasiblePacking when one point needs more than `retry_cap` draws.
NetworkRealization place_uniform_clustering(const NetworkScenario& scenario, Engine& rng);

/// Sequential CSMA deactivation. X0 is activated first; then each interferer,
/// in placement order, is deactivated iff it lies within r_g of X0 or of an
/// already-activated interferer. The receiver has no guard zone.
NetworkRealization csma_thin(NetworkRealization realization, double r_g);

/// Moves the receiver to (r_net, 0) and points X0 inward or outward.
/// Throws std::domain_error for tx_distance <= 0, or > 2 r_net when inward.
NetworkScenario receiver_at_perimeter(NetworkScenario scenario,
                                      PerimeterDirection direction = PerimeterDirection::Outward);

/// Receiver at the origin with X0 at (tx_distance, 0).
NetworkScenario receiver_at_center(NetworkScenario scenario);

// Plain-text point list: "# receiver x y" header, then one line per
// transmitter "index x y active"; index 0 is X0.
std::string to_point_list(const NetworkRealization& realization);
NetworkRealization from_point_list(std::string_view text);

}  // namespace dscdma
