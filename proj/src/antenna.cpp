#include "hibs/antenna.hpp"

#include "hibs/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hibs {

double solve_ka_for_beamwidth(double beamwidth_3db_deg) {
    if (!(beamwidth_3db_deg >= 1.0 && beamwidth_3db_deg <= 90.0)) {
        throw std::invalid_argument("solve_ka_for_beamwidth: beamwidth must be in [1, 90] deg");
    }
    const double s = std::sin(deg2rad(beamwidth_3db_deg / 2.0));
    // The main lobe is monotone for u = ka*sin(theta) below the first null (3.8317).
    double lo = 1e-3 / s;
    double hi = 3.8 / s;
    auto excess = [&](double ka) { return aperture_relative_db(ka * s) + 3.0; };
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = excess(mid);
        if (std::abs(f) < 1e-12 || hi - lo < 1e-14 * hi) {
            return mid;
        }
        // f > 0: pattern not yet 3 dB down, so the aperture must grow.
        (f > 0 ? lo : hi) = mid;
    }
    const double ka = 0.5 * (lo + hi);
    if (std::abs(excess(ka)) > 0.01) {
        throw std::runtime_error("solve_ka_for_beamwidth: bisection did not converge");
    }
    return ka;
}

AperturePattern make_aperture_pattern(double peak_gain_dbi, double beamwidth_3db_deg,
                                      double floor_db) {
    if (!(floor_db > 0)) {
        throw std::invalid_argument("make_aperture_pattern: floor must be positive");
    }
    AperturePattern p;
    p.peak_gain_dbi = peak_gain_dbi;
    p.beamwidth_3db_deg = beamwidth_3db_deg;
    p.normalized_radius_ka = solve_ka_for_beamwidth(beamwidth_3db_deg);
    p.floor_db = floor_db;
    return p;
}

double nadir_beamwidth_for_footprint(double footprint_diameter_m, double altitude_m) {
    if (!(footprint_diameter_m > 0) || !(altitude_m > 0)) {
        throw std::invalid_argument("nadir_beamwidth_for_footprint: non-positive input");
    }
    return 2.0 * rad2deg(std::atan(footprint_diameter_m / 2.0 / altitude_m));
}

double wrap_degrees(double deg) {
    double w = std::fmod(deg + 180.0, 360.0);
    if (w < 0) {
        w += 360.0;
    }
    return w - 180.0;
}

double sector_gain(double az_off_deg, double depression_deg, const SectorPattern &pattern) {
    const double az = wrap_degrees(az_off_deg);
    const double ah = std::min(12.0 * std::pow(az / pattern.h_hpbw_deg, 2), pattern.front_back_db);
    const double av = std::min(
        12.0 * std::pow((depression_deg - pattern.downtilt_deg) / pattern.v_hpbw_deg, 2),
        pattern.sla_db);
    return pattern.peak_gain_dbi - std::min(ah + av, pattern.front_back_db);
}

} // namespace hibs
