// Antenna gain patterns: circular-aperture (Bessel) HIBS beams, three-sector
// terrestrial antennas, isotropic terminals.
#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace hibs {

/**
 * Bessel function of the first kind, order one.
 *
 * Power series below |x| = 8 and the Hankel asymptotic expansion above it;
 * absolute error is below 1e-8 for |x| <= 50.
 */
template <typename Scalar>
Scalar bessel_j1(Scalar x) {
    const Scalar ax = std::abs(x);
    Scalar result;
    if (ax < Scalar(8)) {
        const Scalar half = ax / Scalar(2);
        const Scalar h2 = half * half;
        Scalar term = half;
        Scalar sum = term;
        for (int k = 1; k < 60; ++k) {
            term *= -h2 / Scalar(k * (k + 1));
            sum += term;
            if (std::abs(term) < std::numeric_limits<Scalar>::epsilon() * std::abs(sum)) {
                break;
            }
        }
        result = sum;
    } else {
        // a_k = prod_{j=1..k} (4 - (2j-1)^2) / (k! 8^k), terms a_k / x^k.
        Scalar p = 1;
        Scalar q = 0;
        Scalar term = 1;
        Scalar last = std::numeric_limits<Scalar>::max();
        for (int k = 1; k < 60; ++k) {
            const Scalar odd = Scalar(2 * k - 1);
            const Scalar next = term * (Scalar(4) - odd * odd) / (Scalar(8 * k) * ax);
            if (std::abs(next) >= last) {
                break;
            }
            last = std::abs(next);
            term = next;
            // Even k feeds P, odd k feeds Q, with alternating signs in each.
            const Scalar sign = ((k / 2) % 2 == 0) ? Scalar(1) : Scalar(-1);
            if (k % 2 == 0) {
                p += sign * term;
            } else {
                q += sign * term;
            }
            if (last < std::numeric_limits<Scalar>::epsilon()) {
                break;
            }
        }
        const Scalar omega = ax - Scalar(3) * std::numbers::pi_v<Scalar> / Scalar(4);
        result = std::sqrt(Scalar(2) / (std::numbers::pi_v<Scalar> * ax)) *
                 (p * std::cos(omega) - q * std::sin(omega));
    }
    return x < 0 ? -result : result;
}

/// 10*log10(|2 J1(u)/u|^2), i.e. the aperture pattern relative to its peak [dB].
template <typename Scalar>
Scalar aperture_relative_db(Scalar u) {
    if (std::abs(u) < Scalar(1e-9)) {
        return Scalar(0);
    }
    const Scalar ratio = Scalar(2) * bessel_j1(u) / u;
    const Scalar power = ratio * ratio;
    if (power <= Scalar(0)) {
        return -std::numeric_limits<Scalar>::infinity();
    }
    return Scalar(10) * std::log10(power);
}

struct AperturePattern {
    double peak_gain_dbi = 16.5;
    double normalized_radius_ka = 0; // k * a, aperture radius in wavenumbers
    double beamwidth_3db_deg = 0;
    double floor_db = 30.0; // maximum attenuation below peak

    bool operator==(const AperturePattern &) const = default;
};

/**
 * Gain of a circular aperture at @p theta_off_axis_deg from boresight [dBi].
 * Attenuation is capped at pattern.floor_db. Directions at or behind 90 deg
 * off-axis get the floor value.
 */
template <typename Scalar>
Scalar aperture_gain(Scalar theta_off_axis_deg, const AperturePattern &pattern) {
    const Scalar theta = std::abs(theta_off_axis_deg);
    const Scalar peak = Scalar(pattern.peak_gain_dbi);
    const Scalar floor = peak - Scalar(pattern.floor_db);
    if (theta >= Scalar(90)) {
        return floor;
    }
    const Scalar u = Scalar(pattern.normalized_radius_ka) *
                     std::sin(theta * std::numbers::pi_v<Scalar> / Scalar(180));
    const Scalar g = peak + aperture_relative_db(u);
    return g > floor ? g : floor;
}

/**
 * Finds k*a such that the aperture pattern is 3 dB down at half the given
 * beamwidth. Throws std::invalid_argument outside [1, 90] degrees and
 * std::runtime_error if bisection does not reach 0.01 dB in 100 iterations.
 */
double solve_ka_for_beamwidth(double beamwidth_3db_deg);

/// Pattern with the given peak gain and 3 dB beamwidth.
AperturePattern make_aperture_pattern(double peak_gain_dbi, double beamwidth_3db_deg,
                                      double floor_db = 30.0);

/// Full 3 dB beamwidth that illuminates a ground disk of @p footprint_diameter_m
/// from directly overhead at @p altitude_m.
double nadir_beamwidth_for_footprint(double footprint_diameter_m, double altitude_m);

struct SectorPattern {
    double peak_gain_dbi = 17.0;
    double h_hpbw_deg = 65.0;
    double v_hpbw_deg = 10.0;
    double front_back_db = 30.0;
    double sla_db = 30.0;
    double downtilt_deg = 6.0;

    bool operator==(const SectorPattern &) const = default;
};

/**
 * Three-sector antenna gain [dBi]. @p az_off_deg is the horizontal angle from
 * the sector azimuth (wrapped into [-180, 180]); @p depression_deg is the angle
 * below the horizon toward the receiver, so boresight is depression ==
 * downtilt.
 */
double sector_gain(double az_off_deg, double depression_deg, const SectorPattern &pattern);

/// Wraps an angle into [-180, 180).
double wrap_degrees(double deg);

} // namespace hibs
