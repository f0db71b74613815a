// Experiment description. Defaults reproduce the reference HIBS / rural
// terrestrial assumptions (2 GHz, 20 MHz, 49 dBm BS, 23 dBm UE, ...).
#pragma once

#include "hibs/antenna.hpp"
#include "hibs/channel.hpp"
#include "hibs/network.hpp"

namespace hibs {

enum class Region { R1, R2, R3 };

struct HibsConfig {
    double altitude_m = 20000.0;
    double footprint_diameter_m = 10000.0;
    int n_rings = 2;
    double service_area_km2 = 4000.0;
    double peak_gain_dbi = 16.5;
    double pattern_floor_db = 30.0;
    double tx_power_dbm = 49.0;
    double noise_figure_db = 5.0;

    bool operator==(const HibsConfig &) const = default;
};

struct TerrestrialConfig {
    double isd_m = 9000.0;
    int n_sites = 12;
    double height_m = 30.0;
    double tx_power_dbm = 49.0;
    double noise_figure_db = 5.0;
    SectorPattern pattern;
    double sector_rotation_deg = 0.0;
    double drop_margin_m = 4500.0; // drop disk extends this far past the site ring

    bool operator==(const TerrestrialConfig &) const = default;
};

struct UeConfig {
    double tx_power_dbm = 23.0;
    double antenna_gain_dbi = 0.0;
    double noise_figure_db = 9.0;
    double height_m = 1.5;

    bool operator==(const UeConfig &) const = default;
};

struct MobilityParams {
    double speed_mps = 30.0 / 3.6;
    double sim_duration_s = 2000.0;
    double time_step_s = 0.1;
    double measurement_period_s = 0.2;
    double a3_offset_db = 3.0;
    double time_to_trigger_s = 0.64;
    int n_trajectories = 200; // split evenly between inward and outward movers
    double tn_spawn_radius_m = 16000.0;
    double hibs_spawn_radius_m = 1000.0;

    bool operator==(const MobilityParams &) const = default;
};

struct BandCheckConfig {
    bool enabled = true;
    Region region = Region::R1;

    bool operator==(const BandCheckConfig &) const = default;
};

struct ScenarioConfig {
    Carrier carrier;
    HibsConfig hibs;
    TerrestrialConfig terrestrial;
    UeConfig ue;
    ChannelConfig channel;
    SeMapping scheduler;
    MobilityParams mobility;
    BandCheckConfig band;

    bool operator==(const ScenarioConfig &) const = default;
};

} // namespace hibs
