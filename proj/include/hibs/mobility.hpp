// Straight-line mobility through the combined deployment with A3 handover.
#pragma once

#include "hibs/engine.hpp"

#include <vector>

namespace hibs {

enum class HandoverDirection { TnToHibs, HibsToTn, TnToTn, HibsToHibs };

const char *to_string(HandoverDirection dir);
HandoverDirection handover_direction(CellKind from, CellKind to);

struct HandoverEvent {
    double time_s = 0;
    int user_id = 0;
    int from_cell_id = 0;
    int to_cell_id = 0;
    Position position = Position::Zero();
    HandoverDirection direction = HandoverDirection::TnToHibs;
};

struct Trajectory {
    int user_id = 0;
    Position start = Position::Zero();
    Vec3 heading = Vec3::UnitX(); // unit, horizontal
    bool inward = true;

    Position at(double distance_m) const { return start + heading * distance_m; }
};

struct TrajectoryTrace {
    std::vector<HandoverEvent> events;
    std::vector<int> serving_sequence; // initial cell then one entry per handover
};

/// Throws std::invalid_argument unless 0 < step <= period <= ttt, speed > 0
/// and duration > 0.
void validate(const MobilityParams &params);

/// Inward movers first (spawned on the terrestrial spawn circle heading for
/// the center), then outward movers spawned near the center.
std::vector<Trajectory> make_trajectories(const MobilityParams &params, std::uint64_t seed);

/**
 * Moves one user along @p trajectory. Every measurement period the received
 * power from all cells is evaluated with spatially correlated LOS state and
 * shadowing; a handover fires when a neighbour exceeds the serving cell by
 * the A3 offset for the full time-to-trigger.
 */
TrajectoryTrace simulate_trajectory(const Deployment &deployment, const ScenarioConfig &cfg,
                                    const MobilityParams &params, const Trajectory &trajectory,
                                    Rng &rng);

struct MobilityResult {
    std::vector<Trajectory> trajectories;
    std::vector<TrajectoryTrace> traces;
    std::vector<HandoverEvent> events; // trajectory order, then time order
};

MobilityResult run_mobility(const ExperimentSpec &spec, const MobilityParams &params);

} // namespace hibs
