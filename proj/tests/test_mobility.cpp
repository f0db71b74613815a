#include "hibs/mobility.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace hibs;

TEST_CASE("handover direction") {
    CHECK(handover_direction(CellKind::TnSector, CellKind::HibsBeam) == HandoverDirection::TnToHibs);
    CHECK(handover_direction(CellKind::HibsBeam, CellKind::TnSector) == HandoverDirection::HibsToTn);
    CHECK(handover_direction(CellKind::TnSector, CellKind::TnSector) == HandoverDirection::TnToTn);
    CHECK(std::string(to_string(HandoverDirection::HibsToTn)) == "hibs_to_tn");
}

TEST_CASE("mobility parameter validation") {
    MobilityParams p;
    CHECK_NOTHROW(validate(p));
    p.sim_duration_s = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.speed_mps = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.time_step_s = 0.5;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.measurement_period_s = 1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("trajectories") {
    MobilityParams p;
    p.n_trajectories = 10;
    const auto t = make_trajectories(p, 4);
    REQUIRE(t.size() == 10);
    for (const auto &x : t) {
        CHECK(x.heading.norm() == doctest::Approx(1.0));
        if (x.inward) {
            CHECK(x.start.head<2>().norm() == doctest::Approx(p.tn_spawn_radius_m));
            // Heading points at the center.
            CHECK(x.heading.head<2>().dot(x.start.head<2>().normalized()) == doctest::Approx(-1.0));
        } else {
            CHECK(x.start.head<2>().norm() <= p.hibs_spawn_radius_m);
        }
    }
    CHECK(t[0].inward);
    CHECK_FALSE(t[9].inward);
    CHECK(make_trajectories(p, 4)[3].start == t[3].start);
}

TEST_CASE("handover bookkeeping") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Mobility;
    spec.seed = 8;
    MobilityParams p;
    p.n_trajectories = 6;
    p.sim_duration_s = 600;
    const auto r = run_mobility(spec, p);
    REQUIRE(r.traces.size() == 6);
    const Deployment dep = build_combined_deployment(spec.scenario);
    const double step = p.speed_mps * p.time_step_s;
    std::size_t total = 0;
    for (std::size_t i = 0; i < r.traces.size(); ++i) {
        const auto &tr = r.traces[i];
        const auto &traj = r.trajectories[i];
        total += tr.events.size();
        CHECK(tr.serving_sequence.size() == tr.events.size() + 1);
        for (std::size_t k = 1; k < tr.serving_sequence.size(); ++k) {
            CHECK(tr.serving_sequence[k] != tr.serving_sequence[k - 1]);
        }
        for (const auto &e : tr.events) {
            CHECK(e.from_cell_id != e.to_cell_id);
            CHECK(e.direction == handover_direction(dep.cells[static_cast<std::size_t>(e.from_cell_id)].kind,
                                                    dep.cells[static_cast<std::size_t>(e.to_cell_id)].kind));
            const Position expected = traj.at(p.speed_mps * e.time_s);
            CHECK((e.position.head<2>() - expected.head<2>()).norm() <= step);
        }
    }
    CHECK(total == r.events.size());
}

TEST_CASE("no handover while one cell dominates") {
    ScenarioConfig cfg;
    cfg.channel.shadowing = false;
    cfg.channel.ntn.los_only = true;
    const Deployment dep = build_combined_deployment(cfg);
    MobilityParams p;
    p.sim_duration_s = 300;
    Trajectory t;
    t.start = Position(-1000, 0, 0);
    t.heading = Vec3(1, 0, 0);
    Rng rng = derive_rng(1, 0);
    const auto trace = simulate_trajectory(dep, cfg, p, t, rng);
    CHECK(trace.events.empty());
    REQUIRE(trace.serving_sequence.size() == 1);
    CHECK(trace.serving_sequence[0] == 0);
}
