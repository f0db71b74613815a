// Flat-Earth local tangent frame: x east, y north, z altitude above ground.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace hibs {

template <typename Scalar>
using Position3 = Eigen::Matrix<Scalar, 3, 1>;
using Position = Position3<double>;
using Vec3 = Eigen::Vector3d;

template <typename Scalar>
constexpr Scalar deg2rad(Scalar deg) {
    return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar rad2deg(Scalar rad) {
    return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Derived>
bool is_valid_position(const Eigen::MatrixBase<Derived> &p) {
    return p.allFinite() && p.z() >= 0;
}

/// 3D Euclidean distance [m].
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar slant_distance(const Eigen::MatrixBase<DerivedA> &a,
                                         const Eigen::MatrixBase<DerivedB> &b) {
    return (b - a).norm();
}

/// Horizontal (2D) distance [m], ignoring altitude.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar ground_distance(const Eigen::MatrixBase<DerivedA> &a,
                                          const Eigen::MatrixBase<DerivedB> &b) {
    return (b.template head<2>() - a.template head<2>()).norm();
}

/**
 * Elevation of @p platform above the local horizon as seen from @p ground,
 * in degrees within (0, 90]. Throws std::invalid_argument when the platform
 * is not strictly above the ground point.
 */
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar elevation_angle(const Eigen::MatrixBase<DerivedA> &ground,
                                          const Eigen::MatrixBase<DerivedB> &platform) {
    using Scalar = typename DerivedA::Scalar;
    const Scalar dz = platform.z() - ground.z();
    if (!(dz > 0)) {
        throw std::invalid_argument("elevation_angle: platform must be above ground point");
    }
    return rad2deg(std::atan2(dz, ground_distance(ground, platform)));
}

/// Angle between two non-zero vectors in degrees, [0, 180].
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar off_axis_angle(const Eigen::MatrixBase<DerivedA> &boresight,
                                         const Eigen::MatrixBase<DerivedB> &direction) {
    using Scalar = typename DerivedA::Scalar;
    if (boresight.squaredNorm() == Scalar(0) || direction.squaredNorm() == Scalar(0)) {
        throw std::invalid_argument("off_axis_angle: zero vector");
    }
    // atan2 form stays accurate near 0 and 180 where acos loses precision.
    const Scalar s = boresight.cross(direction).norm();
    const Scalar c = boresight.dot(direction);
    return rad2deg(std::atan2(s, c));
}

struct HibsLayout {
    Position platform_position;
    std::vector<Position> beam_centers;
    std::vector<int> beam_ring; // 0 = center, 1 = first ring, ...
    double footprint_diameter_m = 0;
    double service_radius_m = 0;
};

struct TerrestrialLayout {
    std::vector<Position> site_positions;
    std::vector<double> sector_azimuths_deg; // 3 per site, site-major order
    double isd_m = 0;
    double ring_radius_m = 0;

    int n_sectors() const { return static_cast<int>(sector_azimuths_deg.size()); }
    static int site_of_sector(int sector) { return sector / 3; }
};

inline constexpr double kDefaultServiceAreaM2 = 4000.0e6;

/// Radius of a disk with the given area.
double service_radius_for_area(double area_m2);

/**
 * Hexagonal beam grid with @p n_rings rings around the center (1 + 6 + 12 for
 * two rings). Neighbouring beam centers are footprint_diameter_m apart; beams
 * are ordered ring by ring so that ids are stable.
 */
HibsLayout build_hibs_layout(double footprint_diameter_m, int n_rings = 2,
                             double altitude_m = 20000.0,
                             double service_area_m2 = kDefaultServiceAreaM2);

/// Radius of a ring of @p n_sites sites whose adjacent chord equals @p isd_m.
double tn_ring_radius(double isd_m, int n_sites = 12);

/**
 * Terrestrial three-sector sites on a ring around the origin. Sector 0 of each
 * site points radially outward plus @p sector_rotation_deg; sectors 1 and 2
 * follow at +120 and +240 degrees. Azimuths are counter-clockwise from east.
 */
TerrestrialLayout build_tn_ring_layout(double isd_m, int n_sites = 12, double height_m = 30.0,
                                       double sector_rotation_deg = 0.0);

/// Annulus (or disk when inner_radius_m == 0) centered on (center_x, center_y).
struct DropRegion {
    double inner_radius_m = 0;
    double outer_radius_m = 0;
    double center_x_m = 0;
    double center_y_m = 0;
};

/**
 * Uniform-by-area user drop at height @p height_m. Throws
 * std::invalid_argument for an empty region.
 */
template <typename Rng>
std::vector<Position> drop_users(const DropRegion &region, int count, Rng &rng,
                                 double height_m = 1.5) {
    if (!(region.outer_radius_m > region.inner_radius_m) || region.inner_radius_m < 0) {
        throw std::invalid_argument("drop_users: empty drop region");
    }
    if (count < 0) {
        throw std::invalid_argument("drop_users: negative count");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r0sq = region.inner_radius_m * region.inner_radius_m;
    const double r1sq = region.outer_radius_m * region.outer_radius_m;
    std::vector<Position> users;
    users.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double r = std::sqrt(r0sq + unit(rng) * (r1sq - r0sq));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        users.emplace_back(region.center_x_m + r * std::cos(phi),
                           region.center_y_m + r * std::sin(phi), height_m);
    }
    return users;
}

} // namespace hibs
