// Monte Carlo orchestration: deployments, drops, and the coupling-loss, SINR
// and throughput experiments.
#pragma once

#include "hibs/geometry.hpp"
#include "hibs/network.hpp"
#include "hibs/rng.hpp"
#include "hibs/scenario.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace hibs {

enum class ExperimentKind { CouplingLoss, SinrSweep, ThroughputSweep, Mobility };

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::CouplingLoss;
    std::vector<double> densities{1.0}; // users per cell
    int n_drops = 100;
    std::uint64_t seed = 1;
    int threads = 1;
    ScenarioConfig scenario;
};

/// Throws std::invalid_argument when n_drops < 1, densities are empty or negative.
void validate(const ExperimentSpec &spec);

struct Deployment {
    std::vector<Cell> cells;
    DropRegion drop_region;
    HibsLayout hibs;
    TerrestrialLayout tn; // empty for the HIBS-only deployment
};

/// All beams of one platform: the coupling-loss and SINR scenario.
Deployment build_hibs_deployment(const ScenarioConfig &cfg);

/// Terrestrial ring plus the central HIBS beam as a single cell (id 0).
Deployment build_combined_deployment(const ScenarioConfig &cfg);

struct Drop {
    std::vector<User> users;
    Eigen::MatrixXd coupling_db;  // cells x users
    Eigen::MatrixXd rx_power_dbm; // cells x users
    std::vector<int> serving;
};

/// Places Poisson(mean_users) users, draws the channel and associates them.
Drop simulate_drop(const Deployment &deployment, const ScenarioConfig &cfg, double mean_users,
                   Rng &rng);

/// Builds user records with the configured terminal parameters.
std::vector<User> make_users(const std::vector<Position> &positions, const UeConfig &ue);

/// Per-user DL SINR under the full-buffer activity rule.
std::vector<double> drop_dl_sinr(const Drop &drop, const ScenarioConfig &cfg);

/// Per-user UL SINR, one round-robin slot per user.
std::vector<double> drop_ul_sinr(const Drop &drop, const Deployment &deployment,
                                 const ScenarioConfig &cfg);

struct CouplingLossSample {
    int drop_index = 0;
    int user_id = 0;
    int ring = 0;
    double coupling_loss_db = 0;
};

struct CouplingLossResult {
    double density = 0;
    std::vector<CouplingLossSample> samples;
};

/// Serving-beam coupling loss of every dropped user, tagged by beam ring.
/// Uses the first density of the spec.
CouplingLossResult run_coupling_loss(const ExperimentSpec &spec);

struct SinrSweepPoint {
    double density = 0;
    int n_users = 0;
    std::vector<SinrSample> dl;
    std::vector<SinrSample> ul;
};

std::vector<SinrSweepPoint> run_sinr_sweep(const ExperimentSpec &spec);

struct ThroughputPoint {
    double density = 0;
    double hibs_cell_bps = 0; // mean over drops in which the HIBS cell serves users
    double tn_cell_bps = 0;   // mean over active terrestrial cells
    double hibs_user_bps = 0;
    double tn_user_bps = 0;
    double hibs_se_bpshz = 0;
    double tn_se_bpshz = 0;
    long hibs_active_cells = 0;
    long tn_active_cells = 0;
    long hibs_users = 0;
    long tn_users = 0;
};

std::vector<ThroughputPoint> run_throughput_sweep(const ExperimentSpec &spec);

/// Runs body(i) for i in [0, n) on up to @p threads workers. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(int n, int threads, const std::function<void(int)> &body);

} // namespace hibs
