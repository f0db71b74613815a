#include "hibs/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace hibs {

const char *to_string(HandoverDirection dir) {
    switch (dir) {
    case HandoverDirection::TnToHibs:
        return "tn_to_hibs";
    case HandoverDirection::HibsToTn:
        return "hibs_to_tn";
    case HandoverDirection::TnToTn:
        return "tn_to_tn";
    case HandoverDirection::HibsToHibs:
        return "hibs_to_hibs";
    }
    return "unknown";
}

HandoverDirection handover_direction(CellKind from, CellKind to) {
    if (from == CellKind::TnSector) {
        return to == CellKind::HibsBeam ? HandoverDirection::TnToHibs : HandoverDirection::TnToTn;
    }
    return to == CellKind::HibsBeam ? HandoverDirection::HibsToHibs : HandoverDirection::HibsToTn;
}

void validate(const MobilityParams &p) {
    if (!(p.sim_duration_s > 0)) {
        throw std::invalid_argument("mobility: simulation duration must be positive");
    }
    if (!(p.speed_mps > 0)) {
        throw std::invalid_argument("mobility: speed must be positive");
    }
    if (!(p.time_step_s > 0 && p.time_step_s <= p.measurement_period_s &&
          p.measurement_period_s <= p.time_to_trigger_s)) {
        throw std::invalid_argument(
            "mobility: need 0 < time_step <= measurement_period <= time_to_trigger");
    }
    if (p.n_trajectories < 0) {
        throw std::invalid_argument("mobility: negative trajectory count");
    }
}

std::vector<Trajectory> make_trajectories(const MobilityParams &params, std::uint64_t seed) {
    Rng rng = derive_rng(seed, 0x7472616AULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n_in = (params.n_trajectories + 1) / 2;
    std::vector<Trajectory> out;
    out.reserve(static_cast<std::size_t>(params.n_trajectories));
    for (int i = 0; i < params.n_trajectories; ++i) {
        Trajectory t;
        t.user_id = i;
        t.inward = i < n_in;
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        if (t.inward) {
            t.start = Position(params.tn_spawn_radius_m * std::cos(phi),
                               params.tn_spawn_radius_m * std::sin(phi), 0.0);
            t.heading = Vec3(-std::cos(phi), -std::sin(phi), 0.0);
        } else {
            const double r = params.hibs_spawn_radius_m * std::sqrt(unit(rng));
            const double heading = 2.0 * std::numbers::pi * unit(rng);
            t.start = Position(r * std::cos(phi), r * std::sin(phi), 0.0);
            t.heading = Vec3(std::cos(heading), std::sin(heading), 0.0);
        }
        out.push_back(t);
    }
    return out;
}

namespace {

double standard_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

} // namespace

TrajectoryTrace simulate_trajectory(const Deployment &deployment, const ScenarioConfig &cfg,
                                    const MobilityParams &params, const Trajectory &trajectory,
                                    Rng &rng) {
    validate(params);
    const auto &cells = deployment.cells;
    const int n_cells = static_cast<int>(cells.size());
    const int n_sites = site_count(cells);
    std::vector<int> site_cell(static_cast<std::size_t>(n_sites), -1);
    for (int c = 0; c < n_cells; ++c) {
        auto &slot = site_cell[static_cast<std::size_t>(cells[static_cast<std::size_t>(c)].site_id)];
        if (slot < 0) {
            slot = c;
        }
    }

    // Unit-variance AR(1) processes in travelled distance, one pair per site:
    // the LOS selector (mapped to a uniform through the normal CDF) and the
    // shadowing.
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::ArrayXd z_los(n_sites), z_shadow(n_sites);
    for (int s = 0; s < n_sites; ++s) {
        z_los(s) = normal(rng);
        z_shadow(s) = normal(rng);
    }
    const double hop_m = params.speed_mps * params.measurement_period_s;
    const double rho = std::exp(-hop_m / cfg.channel.shadow_decorrelation_m);
    const double innov = std::sqrt(1.0 - rho * rho);

    const auto n_steps = static_cast<long>(std::llround(params.sim_duration_s / params.time_step_s));
    const long measure_every =
        std::max(1L, std::lround(params.measurement_period_s / params.time_step_s));

    TrajectoryTrace trace;
    std::vector<PathlossSample> per_site(static_cast<std::size_t>(n_sites));
    Eigen::VectorXd rx(n_cells);
    int serving = -1;
    bool timer_running = false;
    double timer_start = 0;

    for (long step = 0; step <= n_steps; ++step) {
        if (step % measure_every != 0) {
            continue;
        }
        const double t = static_cast<double>(step) * params.time_step_s;
        Position pos = trajectory.at(params.speed_mps * t);
        pos.z() = cfg.ue.height_m;

        if (step > 0) {
            for (int s = 0; s < n_sites; ++s) {
                z_los(s) = rho * z_los(s) + innov * normal(rng);
                z_shadow(s) = rho * z_shadow(s) + innov * normal(rng);
            }
        }
        for (int s = 0; s < n_sites; ++s) {
            const int c = site_cell[static_cast<std::size_t>(s)];
            if (c < 0) {
                continue;
            }
            LargeScaleDraw draw;
            draw.los_uniform = std::min(standard_normal_cdf(z_los(s)), std::nextafter(1.0, 0.0));
            draw.shadow_normal = cfg.channel.shadowing ? z_shadow(s) : 0.0;
            per_site[static_cast<std::size_t>(s)] =
                propagation(cells[static_cast<std::size_t>(c)], pos, cfg.carrier, cfg.channel, draw);
        }
        for (int c = 0; c < n_cells; ++c) {
            const auto &cell = cells[static_cast<std::size_t>(c)];
            const auto &p = per_site[static_cast<std::size_t>(cell.site_id)];
            rx(c) = cell.tx_power_dbm - coupling_loss(p.pathloss_db, p.shadow_db, p.clutter_db,
                                                      tx_gain_toward(cell, pos),
                                                      cfg.ue.antenna_gain_dbi);
        }

        if (serving < 0) {
            serving = associate(rx);
            trace.serving_sequence.push_back(serving);
            continue;
        }

        int best = -1;
        for (int c = 0; c < n_cells; ++c) {
            if (c != serving && (best < 0 || rx(c) > rx(best))) {
                best = c;
            }
        }
        if (best >= 0 && rx(best) > rx(serving) + params.a3_offset_db) {
            if (!timer_running) {
                timer_running = true;
                timer_start = t;
            }
            if (t - timer_start >= params.time_to_trigger_s - 1e-9) {
                HandoverEvent ev;
                ev.time_s = t;
                ev.user_id = trajectory.user_id;
                ev.from_cell_id = serving;
                ev.to_cell_id = best;
                ev.position = pos;
                ev.direction = handover_direction(cells[static_cast<std::size_t>(serving)].kind,
                                                  cells[static_cast<std::size_t>(best)].kind);
                trace.events.push_back(ev);
                serving = best;
                trace.serving_sequence.push_back(serving);
                timer_running = false;
            }
        } else {
            timer_running = false;
        }
    }
    return trace;
}

MobilityResult run_mobility(const ExperimentSpec &spec, const MobilityParams &params) {
    validate(params);
    if (spec.threads < 1) {
        throw std::invalid_argument("thread count must be at least 1");
    }
    const Deployment dep = build_combined_deployment(spec.scenario);
    MobilityResult result;
    result.trajectories = make_trajectories(params, spec.seed);
    result.traces.resize(result.trajectories.size());
    parallel_for(static_cast<int>(result.trajectories.size()), spec.threads, [&](int i) {
        Rng rng = derive_rng(spec.seed, 0x6D6F62ULL, static_cast<std::uint64_t>(i));
        result.traces[static_cast<std::size_t>(i)] =
            simulate_trajectory(dep, spec.scenario, params, result.trajectories[static_cast<std::size_t>(i)], rng);
    });
    for (const auto &tr : result.traces) {
        result.events.insert(result.events.end(), tr.events.begin(), tr.events.end());
    }
    return result;
}

} // namespace hibs
