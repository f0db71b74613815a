#include "hibs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hibs {

double fspl(double distance_m, double frequency_hz) {
    if (!(distance_m >= 1.0)) {
        throw std::invalid_argument("fspl: distance below 1 m");
    }
    if (!(frequency_hz > 0)) {
        throw std::invalid_argument("fspl: frequency must be positive");
    }
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / kSpeedOfLight);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db, double thermal_density_dbm_hz) {
    if (!(bandwidth_hz > 0)) {
        throw std::invalid_argument("noise_power_dbm: bandwidth must be positive");
    }
    return thermal_density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double coupling_loss(double pathloss_db, double shadow_db, double clutter_db, double g_tx_dbi,
                     double g_rx_dbi) {
    return pathloss_db + shadow_db + clutter_db - g_tx_dbi - g_rx_dbi;
}

double ntn_los_probability(double elevation_deg, const NtnRuralParams &params) {
    const auto &xs = params.los_elevations_deg;
    const auto &ps = params.los_probabilities;
    if (xs.empty() || xs.size() != ps.size()) {
        throw std::invalid_argument("ntn_los_probability: malformed LOS table");
    }
    if (elevation_deg <= xs.front()) {
        return ps.front();
    }
    if (elevation_deg >= xs.back()) {
        return ps.back();
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), elevation_deg);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double t = (elevation_deg - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ps[i - 1] + t * (ps[i] - ps[i - 1]);
}

double ntn_clutter_loss_db(double elevation_deg, const NtnRuralParams &params) {
    const double t = std::clamp((elevation_deg - 10.0) / 80.0, 0.0, 1.0);
    return params.clutter_db_at_10deg + t * (params.clutter_db_at_90deg - params.clutter_db_at_10deg);
}

PathlossSample ntn_rural_pathloss(double elevation_deg, double distance_m, double frequency_hz,
                                  const NtnRuralParams &params, const LargeScaleDraw &draw) {
    if (!(elevation_deg >= 10.0 && elevation_deg <= 90.0)) {
        throw std::invalid_argument("ntn_rural_pathloss: elevation outside [10, 90] deg");
    }
    PathlossSample s;
    s.pathloss_db = fspl(distance_m, frequency_hz);
    s.los = params.los_only || draw.los_uniform < ntn_los_probability(elevation_deg, params);
    if (s.los) {
        s.shadow_db = params.sigma_los_db * draw.shadow_normal;
    } else {
        s.clutter_db = ntn_clutter_loss_db(elevation_deg, params);
        s.shadow_db = params.sigma_nlos_db * draw.shadow_normal;
    }
    return s;
}

double rma_breakpoint_m(double h_bs_m, double h_ut_m, double frequency_hz) {
    return 2.0 * std::numbers::pi * h_bs_m * h_ut_m * frequency_hz / kSpeedOfLight;
}

double rma_los_probability(double d2d_m, const RmaParams &params) {
    if (d2d_m <= 10.0) {
        return 1.0;
    }
    return std::exp(-(d2d_m - 10.0) / params.los_decay_m);
}

namespace {

double rma_pl1(double d3d_m, double frequency_hz, double h) {
    const double f_ghz = frequency_hz / 1e9;
    const double hk = std::pow(h, 1.72);
    return 20.0 * std::log10(40.0 * std::numbers::pi * d3d_m * f_ghz / 3.0) +
           std::min(0.03 * hk, 10.0) * std::log10(d3d_m) - std::min(0.044 * hk, 14.77) +
           0.002 * std::log10(h) * d3d_m;
}

double d3d_of(double d2d_m, double h_bs_m, double h_ut_m) {
    const double dh = h_bs_m - h_ut_m;
    return std::sqrt(d2d_m * d2d_m + dh * dh);
}

} // namespace

double rma_los_pathloss_db(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                           const RmaParams &params) {
    const double d3d = d3d_of(d2d_m, h_bs_m, h_ut_m);
    const double dbp = rma_breakpoint_m(h_bs_m, h_ut_m, frequency_hz);
    const double h = params.building_height_m;
    double pl;
    if (d2d_m <= dbp) {
        pl = rma_pl1(d3d, frequency_hz, h);
    } else {
        pl = rma_pl1(dbp, frequency_hz, h) + 40.0 * std::log10(d3d / dbp);
    }
    return std::max(pl, fspl(d3d, frequency_hz));
}

double rma_nlos_pathloss_db(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                            const RmaParams &params) {
    const auto &c = params.nlos;
    const double d3d = d3d_of(d2d_m, h_bs_m, h_ut_m);
    const double h = params.building_height_m;
    const double w = params.street_width_m;
    const double nlos = c.intercept - c.street_width * std::log10(w) +
                        c.building_height * std::log10(h) -
                        (c.bs_height - c.bs_height_ratio * std::pow(h / h_bs_m, 2)) * std::log10(h_bs_m) +
                        (c.distance - c.distance_bs_height * std::log10(h_bs_m)) * (std::log10(d3d) - 3.0) +
                        c.frequency * std::log10(frequency_hz / 1e9) -
                        (c.ut_height * std::pow(std::log10(11.75 * h_ut_m), 2) - c.ut_height_offset);
    return std::max(rma_los_pathloss_db(d2d_m, h_bs_m, h_ut_m, frequency_hz, params), nlos);
}

PathlossSample rma_pathloss(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                            const RmaParams &params, const LargeScaleDraw &draw) {
    PathlossSample s;
    const double d = std::clamp(d2d_m, params.min_distance_m, params.max_distance_m);
    s.clamped = d != d2d_m;
    s.los = draw.los_uniform < rma_los_probability(d, params);
    if (s.los) {
        s.pathloss_db = rma_los_pathloss_db(d, h_bs_m, h_ut_m, frequency_hz, params);
        const double sigma = d <= rma_breakpoint_m(h_bs_m, h_ut_m, frequency_hz)
                                 ? params.sigma_los_near_db
                                 : params.sigma_los_far_db;
        s.shadow_db = sigma * draw.shadow_normal;
    } else {
        s.pathloss_db = rma_nlos_pathloss_db(d, h_bs_m, h_ut_m, frequency_hz, params);
        s.shadow_db = params.sigma_nlos_db * draw.shadow_normal;
    }
    if (s.clamped) {
        s.pathloss_db = std::max(s.pathloss_db, fspl(d3d_of(d2d_m, h_bs_m, h_ut_m), frequency_hz));
    }
    return s;
}

} // namespace hibs
