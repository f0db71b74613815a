// hibs-sim: command-line front end for the simulation experiments.
#include "hibs/band.hpp"
#include "hibs/config.hpp"
#include "hibs/results_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    std::vector<double> densities;
    std::string out;
    int threads = 1;
};

void add_common(CLI::App *sub, Options &opt) {
    sub->add_option("--config", opt.config, "Scenario config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "Master seed");
    sub->add_option("--drops", opt.drops, "Monte Carlo drops (trajectories for mobility)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--densities", opt.densities, "Users per cell, comma separated")->delimiter(',');
    sub->add_option("--out", opt.out, "Output directory (default $HIBS_OUT_DIR or .)");
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
}

std::string default_out_dir() {
    const char *env = std::getenv("HIBS_OUT_DIR");
    return env && *env ? env : ".";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"HIBS system-level Monte Carlo simulator"};
    app.require_subcommand(1);
    Options opt;
    const std::pair<const char *, hibs::ExperimentKind> kinds[] = {
        {"coupling-loss", hibs::ExperimentKind::CouplingLoss},
        {"sinr-sweep", hibs::ExperimentKind::SinrSweep},
        {"throughput-sweep", hibs::ExperimentKind::ThroughputSweep},
        {"mobility", hibs::ExperimentKind::Mobility},
    };
    const char *descriptions[] = {
        "Serving-beam coupling loss per beam ring",
        "DL and UL SINR versus user density",
        "Cell and user throughput versus user density, HIBS center cell plus terrestrial ring",
        "Handover positions along straight trajectories",
    };
    std::vector<CLI::App *> subs;
    for (std::size_t i = 0; i < std::size(kinds); ++i) {
        subs.push_back(app.add_subcommand(kinds[i].first, descriptions[i]));
        add_common(subs.back(), opt);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    hibs::ExperimentSpec spec;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            spec.kind = kinds[i].second;
        }
    }

    try {
        if (!opt.config.empty()) {
            spec.scenario = hibs::load_config(opt.config);
        }
        hibs::validate_config(spec.scenario);
    } catch (const hibs::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (opt.seed) {
            spec.seed = *opt.seed;
        }
        if (!opt.densities.empty()) {
            spec.densities = opt.densities;
        } else if (spec.kind == hibs::ExperimentKind::SinrSweep ||
                   spec.kind == hibs::ExperimentKind::ThroughputSweep) {
            spec.densities = {0.1, 0.2, 0.5, 1, 2, 5, 10, 20};
        }
        if (opt.drops) {
            if (spec.kind == hibs::ExperimentKind::Mobility) {
                spec.scenario.mobility.n_trajectories = *opt.drops;
            } else {
                spec.n_drops = *opt.drops;
            }
        }
        spec.threads = opt.threads;

        const auto &band = spec.scenario.band;
        if (band.enabled) {
            for (auto dir : {hibs::Direction::DL, hibs::Direction::UL}) {
                const auto check = hibs::validate_band(spec.scenario.carrier.frequency_hz, band.region, dir);
                if (check.status == hibs::BandStatus::Warning) {
                    std::cerr << "warning: " << check.message << '\n';
                }
            }
        }

        const auto out = hibs::run_experiment(spec);
        const std::string dir = opt.out.empty() ? default_out_dir() : opt.out;
        for (const auto &path : hibs::emit_results(out, dir)) {
            std::cout << path.string() << '\n';
        }
    } catch (const hibs::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
