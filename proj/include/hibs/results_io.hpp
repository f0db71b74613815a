// CSV and JSON result files.
//
// coupling_loss.csv  ring,sample_db
// sinr.csv           density,direction,sinr_db
// throughput.csv     density,kind,cell_bps,user_bps,se_bpshz
// handover.csv       time_s,direction,x_m,y_m,dist_from_center_m
// summary.json       medians, means and a config echo
//
// Numbers use the shortest representation that parses back to the same
// double; '.' decimal separator, '\n' line ends.
#pragma once

#include "hibs/engine.hpp"
#include "hibs/mobility.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace hibs {

struct ExperimentOutput {
    ExperimentSpec spec;
    std::variant<CouplingLossResult, std::vector<SinrSweepPoint>, std::vector<ThroughputPoint>,
                 MobilityResult>
        result;
};

/// Runs the experiment named by spec.kind. Mobility uses spec.scenario.mobility.
ExperimentOutput run_experiment(const ExperimentSpec &spec);

const char *experiment_name(ExperimentKind kind);
const char *ring_label(int ring);

std::string format_number(double v);

std::string coupling_loss_csv(const CouplingLossResult &r);
std::string sinr_csv(const std::vector<SinrSweepPoint> &points);
std::string throughput_csv(const std::vector<ThroughputPoint> &points);
std::string handover_csv(const std::vector<HandoverEvent> &events);

nlohmann::ordered_json summary_json(const ExperimentOutput &out);

/// Writes the experiment's CSV plus summary.json into @p out_dir (created if
/// missing). Throws std::runtime_error naming the path on I/O failure.
std::vector<std::filesystem::path> emit_results(const ExperimentOutput &out,
                                                const std::filesystem::path &out_dir);

} // namespace hibs
