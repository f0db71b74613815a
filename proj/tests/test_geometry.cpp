#include "hibs/antenna.hpp"
#include "hibs/geometry.hpp"
#include "hibs/rng.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace hibs;

TEST_CASE("slant distance") {
    CHECK(slant_distance(Position(0, 0, 0), Position(0, 0, 20000)) == doctest::Approx(20000.0));
    CHECK(slant_distance(Position(1, 2, 3), Position(1, 2, 3)) == 0.0);
    const double expected = std::sqrt(34641.0 * 34641.0 + 19998.5 * 19998.5);
    CHECK(slant_distance(Position(34641, 0, 1.5), Position(0, 0, 20000)) == doctest::Approx(expected));
    CHECK(expected == doctest::Approx(39998).epsilon(1e-4));
}

TEST_CASE("elevation angle") {
    const Position platform(0, 0, 20000);
    CHECK(elevation_angle(Position(0, 0, 0), platform) == doctest::Approx(90.0));
    CHECK(elevation_angle(Position(20000, 0, 0), platform) == doctest::Approx(45.0));
    CHECK(elevation_angle(Position(74640, 0, 0), platform) == doctest::Approx(15.0).epsilon(1e-3));
    CHECK_THROWS_AS(elevation_angle(Position(0, 0, 20000), platform), std::invalid_argument);
    CHECK_THROWS_AS(elevation_angle(Position(0, 0, 25000), platform), std::invalid_argument);

    double prev = 91;
    for (double h = 0; h <= 80000; h += 500) {
        const double e = elevation_angle(Position(h, 0, 1.5), platform);
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("off-axis angle") {
    CHECK(off_axis_angle(Vec3(0, 0, -1), Vec3(0, 0, -1)) == doctest::Approx(0.0));
    CHECK(off_axis_angle(Vec3(1, 0, 0), Vec3(0, 1, 0)) == doctest::Approx(90.0));
    CHECK(off_axis_angle(Vec3(1, 0, 0), Vec3(-3, 0, 0)) == doctest::Approx(180.0));
    // Nadir boresight, user seen at 45 degrees elevation.
    const Vec3 to_user = Position(20000, 0, 0) - Position(0, 0, 20000);
    CHECK(off_axis_angle(Vec3(0, 0, -1), to_user) == doctest::Approx(45.0));
    CHECK_THROWS_AS(off_axis_angle(Vec3::Zero().eval(), Vec3(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("HIBS beam layout") {
    const HibsLayout layout = build_hibs_layout(10000.0);
    REQUIRE(layout.beam_centers.size() == 19);
    CHECK(layout.platform_position == Position(0, 0, 20000));
    CHECK(layout.beam_centers[0].norm() == doctest::Approx(0.0));

    int per_ring[3] = {0, 0, 0};
    for (int r : layout.beam_ring) {
        per_ring[r]++;
    }
    CHECK(per_ring[0] == 1);
    CHECK(per_ring[1] == 6);
    CHECK(per_ring[2] == 12);

    for (std::size_t i = 0; i < layout.beam_centers.size(); ++i) {
        double nearest = 1e18;
        for (std::size_t j = 0; j < layout.beam_centers.size(); ++j) {
            if (i != j) {
                nearest = std::min(nearest, ground_distance(layout.beam_centers[i], layout.beam_centers[j]));
            }
        }
        CHECK(nearest == doctest::Approx(10000.0));
        CHECK(layout.beam_centers[i].head<2>().norm() < layout.service_radius_m);
        CHECK(elevation_angle(layout.beam_centers[i], layout.platform_position) >= 15.0);
    }

    CHECK(layout.service_radius_m == doctest::Approx(35682).epsilon(1e-4));
    CHECK(std::numbers::pi * layout.service_radius_m * layout.service_radius_m == doctest::Approx(4000e6));
    const double edge = slant_distance(Position(layout.service_radius_m, 0, 0), layout.platform_position);
    CHECK(edge == doctest::Approx(std::hypot(35682.0, 20000.0)).epsilon(1e-4));
    CHECK(edge > 40000.0);
    CHECK(edge < 42000.0);

    const HibsLayout single = build_hibs_layout(10000.0, 0);
    REQUIRE(single.beam_centers.size() == 1);
    CHECK(single.beam_centers[0].head<2>().norm() == 0.0);
}

TEST_CASE("terrestrial ring layout") {
    CHECK(tn_ring_radius(9000.0) == doctest::Approx(9000.0 / (2 * std::sin(std::numbers::pi / 12))));
    CHECK(tn_ring_radius(9000.0) == doctest::Approx(17387).epsilon(1e-4));

    const TerrestrialLayout tn = build_tn_ring_layout(9000.0);
    REQUIRE(tn.site_positions.size() == 12);
    CHECK(tn.n_sectors() == 36);
    for (std::size_t i = 0; i < 12; ++i) {
        const auto &a = tn.site_positions[i];
        const auto &b = tn.site_positions[(i + 1) % 12];
        CHECK(ground_distance(a, b) == doctest::Approx(9000.0).epsilon(1.0 / 9000));
        CHECK(a.z() == 30.0);
        const double site_az = rad2deg(std::atan2(a.y(), a.x()));
        CHECK(std::abs(wrap_degrees(tn.sector_azimuths_deg[3 * i] - site_az)) < 1e-9);
        CHECK(wrap_degrees(tn.sector_azimuths_deg[3 * i + 1] - site_az) == doctest::Approx(120.0));
        CHECK(wrap_degrees(tn.sector_azimuths_deg[3 * i + 2] - site_az) == doctest::Approx(-120.0));
    }
}

TEST_CASE("uniform user drop") {
    Rng rng = derive_rng(7, 0);
    const DropRegion disk{0, 1000, 0, 0};
    CHECK(drop_users(disk, 0, rng).empty());

    const int n = 200000;
    const auto users = drop_users(disk, n, rng);
    double sum = 0;
    for (const auto &p : users) {
        CHECK(p.head<2>().norm() <= 1000.0);
        CHECK(p.z() == 1.5);
        sum += p.head<2>().norm();
    }
    // Mean radius of a uniform disk is 2R/3; standard error R/sqrt(18 n).
    CHECK(std::abs(sum / n - 2000.0 / 3.0) < 4 * 1000.0 / std::sqrt(18.0 * n));

    Rng a = derive_rng(3, 1), b = derive_rng(3, 1);
    CHECK(drop_users(disk, 50, a) == drop_users(disk, 50, b));

    const DropRegion annulus{500, 1000, 100, -200};
    for (const auto &p : drop_users(annulus, 1000, rng)) {
        const double r = std::hypot(p.x() - 100, p.y() + 200);
        CHECK(r >= 500.0 - 1e-9);
        CHECK(r <= 1000.0 + 1e-9);
    }
    CHECK_THROWS_AS(drop_users(DropRegion{0, 0, 0, 0}, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(drop_users(disk, -1, rng), std::invalid_argument);
}
