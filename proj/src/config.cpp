#include "hibs/config.hpp"

#include "hibs/band.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace hibs {

namespace pt = boost::property_tree;

namespace {

// Single list of every configurable field; drives load, save and JSON echo.
template <typename Cfg, typename F>
void visit_fields(Cfg &cfg, F &&f) {
    f("carrier", "frequency_hz", cfg.carrier.frequency_hz);
    f("carrier", "bandwidth_hz", cfg.carrier.bandwidth_hz);

    f("hibs", "altitude_m", cfg.hibs.altitude_m);
    f("hibs", "footprint_diameter_m", cfg.hibs.footprint_diameter_m);
    f("hibs", "n_rings", cfg.hibs.n_rings);
    f("hibs", "service_area_km2", cfg.hibs.service_area_km2);
    f("hibs", "peak_gain_dbi", cfg.hibs.peak_gain_dbi);
    f("hibs", "pattern_floor_db", cfg.hibs.pattern_floor_db);
    f("hibs", "tx_power_dbm", cfg.hibs.tx_power_dbm);
    f("hibs", "noise_figure_db", cfg.hibs.noise_figure_db);

    f("terrestrial", "isd_m", cfg.terrestrial.isd_m);
    f("terrestrial", "n_sites", cfg.terrestrial.n_sites);
    f("terrestrial", "height_m", cfg.terrestrial.height_m);
    f("terrestrial", "tx_power_dbm", cfg.terrestrial.tx_power_dbm);
    f("terrestrial", "noise_figure_db", cfg.terrestrial.noise_figure_db);
    f("terrestrial", "peak_gain_dbi", cfg.terrestrial.pattern.peak_gain_dbi);
    f("terrestrial", "h_hpbw_deg", cfg.terrestrial.pattern.h_hpbw_deg);
    f("terrestrial", "v_hpbw_deg", cfg.terrestrial.pattern.v_hpbw_deg);
    f("terrestrial", "front_back_db", cfg.terrestrial.pattern.front_back_db);
    f("terrestrial", "sla_db", cfg.terrestrial.pattern.sla_db);
    f("terrestrial", "downtilt_deg", cfg.terrestrial.pattern.downtilt_deg);
    f("terrestrial", "sector_rotation_deg", cfg.terrestrial.sector_rotation_deg);
    f("terrestrial", "drop_margin_m", cfg.terrestrial.drop_margin_m);

    f("ue", "tx_power_dbm", cfg.ue.tx_power_dbm);
    f("ue", "antenna_gain_dbi", cfg.ue.antenna_gain_dbi);
    f("ue", "noise_figure_db", cfg.ue.noise_figure_db);
    f("ue", "height_m", cfg.ue.height_m);

    f("channel", "shadowing", cfg.channel.shadowing);
    f("channel", "shadow_decorrelation_m", cfg.channel.shadow_decorrelation_m);
    f("channel", "thermal_density_dbm_hz", cfg.channel.thermal_density_dbm_hz);
    f("channel", "ntn_los_only", cfg.channel.ntn.los_only);
    f("channel", "ntn_los_elevations_deg", cfg.channel.ntn.los_elevations_deg);
    f("channel", "ntn_los_probabilities", cfg.channel.ntn.los_probabilities);
    f("channel", "ntn_clutter_db_at_10deg", cfg.channel.ntn.clutter_db_at_10deg);
    f("channel", "ntn_clutter_db_at_90deg", cfg.channel.ntn.clutter_db_at_90deg);
    f("channel", "ntn_sigma_los_db", cfg.channel.ntn.sigma_los_db);
    f("channel", "ntn_sigma_nlos_db", cfg.channel.ntn.sigma_nlos_db);
    f("channel", "rma_building_height_m", cfg.channel.rma.building_height_m);
    f("channel", "rma_street_width_m", cfg.channel.rma.street_width_m);
    f("channel", "rma_min_distance_m", cfg.channel.rma.min_distance_m);
    f("channel", "rma_max_distance_m", cfg.channel.rma.max_distance_m);
    f("channel", "rma_los_decay_m", cfg.channel.rma.los_decay_m);
    f("channel", "rma_sigma_los_near_db", cfg.channel.rma.sigma_los_near_db);
    f("channel", "rma_sigma_los_far_db", cfg.channel.rma.sigma_los_far_db);
    f("channel", "rma_sigma_nlos_db", cfg.channel.rma.sigma_nlos_db);

    f("rma_nlos", "intercept", cfg.channel.rma.nlos.intercept);
    f("rma_nlos", "street_width", cfg.channel.rma.nlos.street_width);
    f("rma_nlos", "building_height", cfg.channel.rma.nlos.building_height);
    f("rma_nlos", "bs_height", cfg.channel.rma.nlos.bs_height);
    f("rma_nlos", "bs_height_ratio", cfg.channel.rma.nlos.bs_height_ratio);
    f("rma_nlos", "distance", cfg.channel.rma.nlos.distance);
    f("rma_nlos", "distance_bs_height", cfg.channel.rma.nlos.distance_bs_height);
    f("rma_nlos", "frequency", cfg.channel.rma.nlos.frequency);
    f("rma_nlos", "ut_height", cfg.channel.rma.nlos.ut_height);
    f("rma_nlos", "ut_height_offset", cfg.channel.rma.nlos.ut_height_offset);

    f("scheduler", "se_alpha", cfg.scheduler.alpha);
    f("scheduler", "se_sinr_min_db", cfg.scheduler.sinr_min_db);
    f("scheduler", "se_max_bpshz", cfg.scheduler.se_max_bpshz);

    f("mobility", "speed_mps", cfg.mobility.speed_mps);
    f("mobility", "sim_duration_s", cfg.mobility.sim_duration_s);
    f("mobility", "time_step_s", cfg.mobility.time_step_s);
    f("mobility", "measurement_period_s", cfg.mobility.measurement_period_s);
    f("mobility", "a3_offset_db", cfg.mobility.a3_offset_db);
    f("mobility", "time_to_trigger_s", cfg.mobility.time_to_trigger_s);
    f("mobility", "n_trajectories", cfg.mobility.n_trajectories);
    f("mobility", "tn_spawn_radius_m", cfg.mobility.tn_spawn_radius_m);
    f("mobility", "hibs_spawn_radius_m", cfg.mobility.hibs_spawn_radius_m);

    f("band", "check", cfg.band.enabled);
    f("band", "region", cfg.band.region);
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string format(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}
std::string format(int v) { return std::to_string(v); }
std::string format(bool v) { return v ? "true" : "false"; }
std::string format(Region r) { return to_string(r); }
std::string format(const std::vector<double> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + format(v[i]);
    }
    return out;
}

[[noreturn]] void bad_value(const std::string &key, const std::string &text, const char *expected) {
    throw ConfigError(key + ": cannot parse '" + text + "' as " + expected, key);
}

void parse(const std::string &key, const std::string &raw, double &out) {
    const std::string s = trim(raw);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        bad_value(key, raw, "a number");
    }
}

void parse(const std::string &key, const std::string &raw, int &out) {
    const std::string s = trim(raw);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        bad_value(key, raw, "an integer");
    }
}

void parse(const std::string &key, const std::string &raw, bool &out) {
    std::string s = trim(raw);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "true" || s == "on" || s == "yes" || s == "1") {
        out = true;
    } else if (s == "false" || s == "off" || s == "no" || s == "0") {
        out = false;
    } else {
        bad_value(key, raw, "a boolean");
    }
}

void parse(const std::string &key, const std::string &raw, Region &out) {
    const std::string s = trim(raw);
    if (s == "R1") {
        out = Region::R1;
    } else if (s == "R2") {
        out = Region::R2;
    } else if (s == "R3") {
        out = Region::R3;
    } else {
        bad_value(key, raw, "a region (R1, R2, R3)");
    }
}

void parse(const std::string &key, const std::string &raw, std::vector<double> &out) {
    out.clear();
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0;
        parse(key, item, v);
        out.push_back(v);
    }
}

void require(bool ok, const std::string &key, const std::string &what) {
    if (!ok) {
        throw ConfigError(key + ": " + what, key);
    }
}

} // namespace

void validate_config(const ScenarioConfig &c) {
    require(c.carrier.frequency_hz > 0, "carrier.frequency_hz", "must be positive");
    require(c.carrier.bandwidth_hz > 0, "carrier.bandwidth_hz", "must be positive");

    require(c.hibs.altitude_m > 0, "hibs.altitude_m", "must be positive");
    require(c.hibs.footprint_diameter_m > 0, "hibs.footprint_diameter_m", "must be positive");
    require(c.hibs.n_rings >= 0 && c.hibs.n_rings <= 20, "hibs.n_rings", "must be in [0, 20]");
    require(c.hibs.service_area_km2 > 0, "hibs.service_area_km2", "must be positive");
    require(c.hibs.pattern_floor_db > 0, "hibs.pattern_floor_db", "must be positive");
    require(c.hibs.noise_figure_db >= 0, "hibs.noise_figure_db", "must be non-negative");
    const double bw = 2.0 * std::atan(c.hibs.footprint_diameter_m / 2.0 / c.hibs.altitude_m) * 180.0 /
                      std::numbers::pi;
    require(bw >= 1.0 && bw <= 90.0, "hibs.footprint_diameter_m",
            "implies a beamwidth outside [1, 90] deg at this altitude");

    const auto &t = c.terrestrial;
    require(t.isd_m > 0, "terrestrial.isd_m", "must be positive");
    require(t.n_sites >= 3, "terrestrial.n_sites", "must be at least 3");
    require(t.height_m > 0, "terrestrial.height_m", "must be positive");
    require(t.noise_figure_db >= 0, "terrestrial.noise_figure_db", "must be non-negative");
    require(t.pattern.h_hpbw_deg > 0, "terrestrial.h_hpbw_deg", "must be positive");
    require(t.pattern.v_hpbw_deg > 0, "terrestrial.v_hpbw_deg", "must be positive");
    require(t.pattern.front_back_db >= 0, "terrestrial.front_back_db", "must be non-negative");
    require(t.pattern.sla_db >= 0, "terrestrial.sla_db", "must be non-negative");
    require(t.drop_margin_m >= 0, "terrestrial.drop_margin_m", "must be non-negative");

    require(c.ue.noise_figure_db >= 0, "ue.noise_figure_db", "must be non-negative");
    require(c.ue.height_m > 0 && c.ue.height_m < c.hibs.altitude_m, "ue.height_m",
            "must be positive and below the platform");

    const auto &n = c.channel.ntn;
    require(!n.los_elevations_deg.empty(), "channel.ntn_los_elevations_deg", "must not be empty");
    require(n.los_elevations_deg.size() == n.los_probabilities.size(), "channel.ntn_los_probabilities",
            "must have one entry per elevation");
    require(std::is_sorted(n.los_elevations_deg.begin(), n.los_elevations_deg.end()) &&
                std::adjacent_find(n.los_elevations_deg.begin(), n.los_elevations_deg.end()) ==
                    n.los_elevations_deg.end(),
            "channel.ntn_los_elevations_deg", "must be strictly increasing");
    require(std::all_of(n.los_probabilities.begin(), n.los_probabilities.end(),
                        [](double p) { return p >= 0 && p <= 1; }) &&
                std::is_sorted(n.los_probabilities.begin(), n.los_probabilities.end()),
            "channel.ntn_los_probabilities", "must be in [0, 1] and non-decreasing");
    require(n.clutter_db_at_10deg >= 0, "channel.ntn_clutter_db_at_10deg", "must be non-negative");
    require(n.clutter_db_at_90deg >= 0, "channel.ntn_clutter_db_at_90deg", "must be non-negative");
    require(n.sigma_los_db >= 0, "channel.ntn_sigma_los_db", "must be non-negative");
    require(n.sigma_nlos_db >= 0, "channel.ntn_sigma_nlos_db", "must be non-negative");
    const auto &r = c.channel.rma;
    require(r.min_distance_m >= 1, "channel.rma_min_distance_m", "must be at least 1 m");
    require(r.max_distance_m > r.min_distance_m, "channel.rma_max_distance_m",
            "must exceed rma_min_distance_m");
    require(r.los_decay_m > 0, "channel.rma_los_decay_m", "must be positive");
    require(r.building_height_m > 0, "channel.rma_building_height_m", "must be positive");
    require(r.street_width_m > 0, "channel.rma_street_width_m", "must be positive");
    require(r.sigma_los_near_db >= 0, "channel.rma_sigma_los_near_db", "must be non-negative");
    require(r.sigma_los_far_db >= 0, "channel.rma_sigma_los_far_db", "must be non-negative");
    require(r.sigma_nlos_db >= 0, "channel.rma_sigma_nlos_db", "must be non-negative");
    require(c.channel.shadow_decorrelation_m > 0, "channel.shadow_decorrelation_m", "must be positive");

    require(c.scheduler.alpha > 0, "scheduler.se_alpha", "must be positive");
    require(c.scheduler.se_max_bpshz > 0, "scheduler.se_max_bpshz", "must be positive");

    const auto &m = c.mobility;
    require(m.speed_mps > 0, "mobility.speed_mps", "must be positive");
    require(m.sim_duration_s > 0, "mobility.sim_duration_s", "must be positive");
    require(m.time_step_s > 0, "mobility.time_step_s", "must be positive");
    require(m.measurement_period_s >= m.time_step_s, "mobility.measurement_period_s",
            "must be at least time_step_s");
    require(m.time_to_trigger_s >= m.measurement_period_s, "mobility.time_to_trigger_s",
            "must be at least measurement_period_s");
    require(m.n_trajectories >= 0, "mobility.n_trajectories", "must be non-negative");
    require(m.tn_spawn_radius_m > 0, "mobility.tn_spawn_radius_m", "must be positive");
    require(m.hibs_spawn_radius_m >= 0, "mobility.hibs_spawn_radius_m", "must be non-negative");
}

ScenarioConfig parse_config(const std::string &text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message(), {},
                          static_cast<int>(e.line()));
    }

    ScenarioConfig cfg;
    std::set<std::string> known;
    std::set<std::string> sections;
    visit_fields(cfg, [&](const char *section, const char *key, auto &) {
        known.insert(std::string(section) + "." + key);
        sections.insert(section);
    });
    for (const auto &[section, body] : tree) {
        if (body.empty() && !body.data().empty()) {
            throw ConfigError("unknown key '" + section + "' outside any section", section);
        }
        if (!sections.contains(section)) {
            throw ConfigError("unknown section '" + section + "'", section);
        }
        for (const auto &[key, value] : body) {
            const std::string full = section + "." + key;
            if (!known.contains(full)) {
                throw ConfigError("unknown key '" + full + "'", full);
            }
        }
    }
    visit_fields(cfg, [&](const char *section, const char *key, auto &field) {
        const std::string full = std::string(section) + "." + key;
        if (const auto v = tree.get_optional<std::string>(pt::ptree::path_type(full, '.'))) {
            parse(full, *v, field);
        }
    });
    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig &cfg) {
    std::ostringstream os;
    std::string current;
    visit_fields(cfg, [&](const char *section, const char *key, const auto &field) {
        if (current != section) {
            os << (current.empty() ? "" : "\n") << "[" << section << "]\n";
            current = section;
        }
        os << key << " = " << format(field) << "\n";
    });
    return os.str();
}

nlohmann::ordered_json config_to_json(const ScenarioConfig &cfg) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    visit_fields(cfg, [&](const char *section, const char *key, const auto &field) {
        using T = std::decay_t<decltype(field)>;
        if constexpr (std::is_same_v<T, Region>) {
            j[section][key] = to_string(field);
        } else {
            j[section][key] = field;
        }
    });
    return j;
}

} // namespace hibs
