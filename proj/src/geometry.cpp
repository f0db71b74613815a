#include "hibs/geometry.hpp"

#include <array>

namespace hibs {

double service_radius_for_area(double area_m2) {
    if (!(area_m2 > 0)) {
        throw std::invalid_argument("service area must be positive");
    }
    return std::sqrt(area_m2 / std::numbers::pi);
}

HibsLayout build_hibs_layout(double footprint_diameter_m, int n_rings, double altitude_m,
                             double service_area_m2) {
    if (!(footprint_diameter_m > 0)) {
        throw std::invalid_argument("build_hibs_layout: footprint diameter must be positive");
    }
    if (n_rings < 0) {
        throw std::invalid_argument("build_hibs_layout: negative ring count");
    }
    if (!(altitude_m > 0)) {
        throw std::invalid_argument("build_hibs_layout: altitude must be positive");
    }

    HibsLayout layout;
    layout.platform_position = Position(0, 0, altitude_m);
    layout.footprint_diameter_m = footprint_diameter_m;
    layout.service_radius_m = service_radius_for_area(service_area_m2);

    // Axial hex directions; a ring walk starts at k * dir[4] and takes k steps
    // along each direction in turn.
    constexpr std::array<std::array<int, 2>, 6> dirs{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
    const double sqrt3 = std::sqrt(3.0);
    auto to_xy = [&](int q, int r) {
        return Position(footprint_diameter_m * (q + 0.5 * r),
                        footprint_diameter_m * (sqrt3 / 2.0) * r, 0.0);
    };

    layout.beam_centers.push_back(Position::Zero());
    layout.beam_ring.push_back(0);
    for (int k = 1; k <= n_rings; ++k) {
        int q = dirs[4][0] * k;
        int r = dirs[4][1] * k;
        for (const auto &d : dirs) {
            for (int step = 0; step < k; ++step) {
                layout.beam_centers.push_back(to_xy(q, r));
                layout.beam_ring.push_back(k);
                q += d[0];
                r += d[1];
            }
        }
    }
    return layout;
}

double tn_ring_radius(double isd_m, int n_sites) {
    if (!(isd_m > 0) || n_sites < 3) {
        throw std::invalid_argument("tn_ring_radius: need isd > 0 and at least 3 sites");
    }
    return isd_m / (2.0 * std::sin(std::numbers::pi / n_sites));
}

TerrestrialLayout build_tn_ring_layout(double isd_m, int n_sites, double height_m,
                                       double sector_rotation_deg) {
    TerrestrialLayout layout;
    layout.isd_m = isd_m;
    layout.ring_radius_m = tn_ring_radius(isd_m, n_sites);
    for (int s = 0; s < n_sites; ++s) {
        const double angle_deg = 360.0 * s / n_sites;
        const double a = deg2rad(angle_deg);
        layout.site_positions.emplace_back(layout.ring_radius_m * std::cos(a),
                                           layout.ring_radius_m * std::sin(a), height_m);
        for (int k = 0; k < 3; ++k) {
            double az = std::fmod(angle_deg + sector_rotation_deg + 120.0 * k, 360.0);
            layout.sector_azimuths_deg.push_back(az < 0 ? az + 360.0 : az);
        }
    }
    return layout;
}

} // namespace hibs
