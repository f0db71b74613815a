// Large-scale propagation: free-space loss, NTN rural (HIBS links) and rural
// macro (terrestrial links) pathloss with LOS state, clutter and shadowing.
#pragma once

#include <random>
#include <vector>

namespace hibs {

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kThermalNoiseDensityDbmHz = -174.0;

struct Carrier {
    double frequency_hz = 2.0e9;
    double bandwidth_hz = 20.0e6;

    bool operator==(const Carrier &) const = default;
};

struct NoiseSpec {
    double noise_figure_db = 0;
    double thermal_density_dbm_hz = kThermalNoiseDensityDbmHz;
};

struct LinkBudget {
    double distance_m = 0;
    double elevation_deg = 0;
    double pathloss_db = 0;
    double shadow_db = 0;
    double clutter_db = 0;
    double g_tx_dbi = 0;
    double g_rx_dbi = 0;
    double coupling_loss_db = 0;
    bool los = true;
    bool clamped = false;
};

/// Free-space pathloss [dB]. Throws std::invalid_argument below 1 m.
double fspl(double distance_m, double frequency_hz);

/// Thermal noise power over @p bandwidth_hz including the receiver noise figure [dBm].
double noise_power_dbm(double bandwidth_hz, double noise_figure_db,
                       double thermal_density_dbm_hz = kThermalNoiseDensityDbmHz);

inline double noise_power_dbm(double bandwidth_hz, const NoiseSpec &noise) {
    return noise_power_dbm(bandwidth_hz, noise.noise_figure_db, noise.thermal_density_dbm_hz);
}

/// Losses minus gains [dB].
double coupling_loss(double pathloss_db, double shadow_db, double clutter_db, double g_tx_dbi,
                     double g_rx_dbi);

/**
 * Random inputs of one large-scale realization. los_uniform in [0, 1) selects
 * the LOS state against the model's LOS probability; shadow_normal is a
 * standard normal scaled by the state's shadowing deviation.
 */
struct LargeScaleDraw {
    double los_uniform = 0.0;
    double shadow_normal = 0.0;
};

template <typename Rng>
LargeScaleDraw draw_large_scale(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    LargeScaleDraw d;
    d.los_uniform = unit(rng);
    d.shadow_normal = normal(rng);
    return d;
}

struct PathlossSample {
    double pathloss_db = 0;
    double shadow_db = 0;
    double clutter_db = 0;
    bool los = true;
    bool clamped = false; // distance was outside the model window
};

struct NtnRuralParams {
    std::vector<double> los_elevations_deg{10, 20, 30, 40, 50, 60, 70, 80, 90};
    std::vector<double> los_probabilities{0.25, 0.55, 0.70, 0.80, 0.85, 0.90, 0.95, 0.99, 1.0};
    double clutter_db_at_10deg = 19.0;
    double clutter_db_at_90deg = 10.0;
    double sigma_los_db = 4.0;
    double sigma_nlos_db = 8.0;
    bool los_only = false;

    bool operator==(const NtnRuralParams &) const = default;
};

/// LOS probability at @p elevation_deg, linear between table points.
double ntn_los_probability(double elevation_deg, const NtnRuralParams &params);

/// NLOS clutter loss, linear in elevation between the 10 and 90 degree anchors.
double ntn_clutter_loss_db(double elevation_deg, const NtnRuralParams &params);

/**
 * HIBS-to-ground pathloss. Pathloss is always free space; NLOS links add
 * clutter loss. Throws std::invalid_argument for elevations outside [10, 90].
 */
PathlossSample ntn_rural_pathloss(double elevation_deg, double distance_m, double frequency_hz,
                                  const NtnRuralParams &params, const LargeScaleDraw &draw);

template <typename Rng>
PathlossSample ntn_rural_pathloss(double elevation_deg, double distance_m, double frequency_hz,
                                  const NtnRuralParams &params, Rng &rng) {
    return ntn_rural_pathloss(elevation_deg, distance_m, frequency_hz, params,
                              draw_large_scale(rng));
}

/// NLOS regression coefficients of the rural-macro model (f in GHz, d in m).
struct RmaNlosCoefficients {
    double intercept = 161.04;
    double street_width = 7.1;
    double building_height = 7.5;
    double bs_height = 24.37;
    double bs_height_ratio = 3.7;
    double distance = 43.42;
    double distance_bs_height = 3.1;
    double frequency = 20.0;
    double ut_height = 3.2;
    double ut_height_offset = 4.97;

    bool operator==(const RmaNlosCoefficients &) const = default;
};

struct RmaParams {
    double building_height_m = 5.0;
    double street_width_m = 20.0;
    double min_distance_m = 10.0;
    double max_distance_m = 21000.0;
    double los_decay_m = 1000.0;
    double sigma_los_near_db = 4.0; // inside the breakpoint distance
    double sigma_los_far_db = 6.0;
    double sigma_nlos_db = 8.0;
    RmaNlosCoefficients nlos;

    bool operator==(const RmaParams &) const = default;
};

double rma_breakpoint_m(double h_bs_m, double h_ut_m, double frequency_hz);
double rma_los_probability(double d2d_m, const RmaParams &params);
/// Dual-slope LOS pathloss, never below free space at the 3D distance.
double rma_los_pathloss_db(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                           const RmaParams &params);
/// max(LOS, NLOS regression).
double rma_nlos_pathloss_db(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                            const RmaParams &params);

/**
 * Terrestrial rural-macro pathloss. Distances outside the model window are
 * clamped into it and flagged; the result never drops below free space at
 * the true 3D distance.
 */
PathlossSample rma_pathloss(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                            const RmaParams &params, const LargeScaleDraw &draw);

template <typename Rng>
PathlossSample rma_pathloss(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz,
                            const RmaParams &params, Rng &rng) {
    return rma_pathloss(d2d_m, h_bs_m, h_ut_m, frequency_hz, params, draw_large_scale(rng));
}

struct ChannelConfig {
    NtnRuralParams ntn;
    RmaParams rma;
    bool shadowing = true;
    double shadow_decorrelation_m = 50.0; // along mobility trajectories
    double thermal_density_dbm_hz = kThermalNoiseDensityDbmHz;

    bool operator==(const ChannelConfig &) const = default;
};

} // namespace hibs
