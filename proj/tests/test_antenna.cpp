#include "hibs/antenna.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

using namespace hibs;

namespace {

// Power series of J_n, summed in long double; adequate for |x| <= 20.
double series_jn(int n, double x) {
    long double term = 1;
    for (int k = 1; k <= n; ++k) {
        term *= static_cast<long double>(x) / 2 / k;
    }
    long double sum = term;
    const long double q = -static_cast<long double>(x) * x / 4;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::abs(term) < 1e-30L) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double oracle_relative_db(double ka, double theta_deg) {
    const double u = ka * std::sin(theta_deg * std::numbers::pi / 180);
    const double v = 2 * std::cyl_bessel_j(1.0, u) / u;
    return 10 * std::log10(v * v);
}

} // namespace

TEST_CASE("bessel_j1 values") {
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j1(1e-6) / 1e-6 == doctest::Approx(0.5));
    for (double x = -50; x <= 50; x += 0.0625) {
        CHECK(std::abs(bessel_j1(x) - (x < 0 ? -1 : 1) * std::cyl_bessel_j(1.0, std::abs(x))) <= 1e-8);
    }
}

TEST_CASE("bessel_j1 first zero") {
    double lo = 3, hi = 4.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j1(lo) * bessel_j1(mid) <= 0 ? hi : lo) = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - 3.83171) < 1e-4);
}

TEST_CASE("bessel_j1 recurrence against independent J0 and J2") {
    for (double x = 0.05; x <= 20; x += 0.05) {
        CHECK(std::abs(series_jn(0, x) + series_jn(2, x) - 2 * bessel_j1(x) / x) <= 1e-7);
    }
}

TEST_CASE("ka for the nadir footprint") {
    const double bw = nadir_beamwidth_for_footprint(10000, 20000);
    CHECK(bw == doctest::Approx(2 * std::atan(0.25) * 180 / std::numbers::pi));
    CHECK(bw == doctest::Approx(28.07).epsilon(1e-3));

    // Independent bisection on the pattern formula.
    double lo = 0.1, hi = 3.8 / std::sin(bw / 2 * std::numbers::pi / 180);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (oracle_relative_db(mid, bw / 2) > -3 ? lo : hi) = mid;
    }
    const double ka = solve_ka_for_beamwidth(bw);
    CHECK(ka == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-3));

    const AperturePattern p = make_aperture_pattern(16.5, bw);
    CHECK(aperture_gain(0.0, p) == 16.5);
    CHECK(std::abs(aperture_gain(bw / 2, p) - 13.5) <= 0.05);
    CHECK(std::abs(aperture_gain(bw / 2, p) - (16.5 + oracle_relative_db(p.normalized_radius_ka, bw / 2))) < 1e-6);
}

TEST_CASE("ka decreases with beamwidth") {
    double prev = 1e9;
    for (double bw = 1; bw <= 90; bw += 0.5) {
        const double ka = solve_ka_for_beamwidth(bw);
        CHECK(ka < prev);
        prev = ka;
        const AperturePattern p = make_aperture_pattern(10, bw);
        CHECK(std::abs(aperture_gain(bw / 2, p) - 7.0) <= 0.01);
    }
    CHECK_THROWS_AS(solve_ka_for_beamwidth(0.5), std::invalid_argument);
    CHECK_THROWS_AS(solve_ka_for_beamwidth(91), std::invalid_argument);
}

TEST_CASE("aperture pattern shape") {
    const AperturePattern p = make_aperture_pattern(16.5, nadir_beamwidth_for_footprint(10000, 20000));
    const double null_deg = std::asin(3.8317059702 / p.normalized_radius_ka) * 180 / std::numbers::pi;
    CHECK(aperture_gain(null_deg, p) == doctest::Approx(-13.5));

    double prev = 1e9;
    for (double t = 0; t <= null_deg; t += 0.01) {
        const double g = aperture_gain(t, p);
        CHECK(g <= prev + 1e-12);
        CHECK(g == doctest::Approx(aperture_gain(-t, p)));
        prev = g;
    }
    for (double t = 0; t <= 90; t += 0.1) {
        CHECK(aperture_gain(t, p) >= 16.5 - 30);
        CHECK(aperture_gain(t, p) <= 16.5);
    }
}

TEST_CASE("sector pattern") {
    const SectorPattern s;
    CHECK(sector_gain(0, s.downtilt_deg, s) == doctest::Approx(17.0));
    CHECK(sector_gain(65, s.downtilt_deg, s) == doctest::Approx(5.0));
    CHECK(sector_gain(-65, s.downtilt_deg, s) == doctest::Approx(5.0));
    CHECK(sector_gain(180, s.downtilt_deg, s) == doctest::Approx(-13.0));
    CHECK(sector_gain(0, s.downtilt_deg + 10, s) == doctest::Approx(5.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> az(-180, 180), el(-90, 90);
    for (int i = 0; i < 10000; ++i) {
        const double a = az(rng), e = el(rng);
        const double g = sector_gain(a, e, s);
        CHECK(g >= s.peak_gain_dbi - 30);
        CHECK(g <= s.peak_gain_dbi);
        CHECK(g == doctest::Approx(sector_gain(-a, e, s)));
    }
}

TEST_CASE("wrap_degrees") {
    CHECK(wrap_degrees(190) == doctest::Approx(-170));
    CHECK(wrap_degrees(-190) == doctest::Approx(170));
    CHECK(wrap_degrees(720) == doctest::Approx(0));
}
