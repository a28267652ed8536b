#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "arctomo/geometry.hpp"

using namespace arctomo;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("geometry");

TEST_CASE("radius from scatter angle") {
    CHECK(radius_from_scatter_angle(kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(radius_from_scatter_angle(3 * kPi / 4) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(radius_from_scatter_angle(5 * kPi / 6) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(radius_from_scatter_angle(kPi / 2 - 0.01), std::domain_error);
    CHECK_THROWS_AS(radius_from_scatter_angle(kPi), std::domain_error);
}

TEST_CASE("scatter angle from radius") {
    CHECK(scatter_angle_from_radius(1.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(scatter_angle_from_radius(2.0) == doctest::Approx(5 * kPi / 6).epsilon(1e-14));
    CHECK(scatter_angle_from_radius(std::sqrt(2.0)) ==
          doctest::Approx(3 * kPi / 4).epsilon(1e-14));
    CHECK_THROWS_AS(scatter_angle_from_radius(0.999), std::domain_error);
}

TEST_CASE("angle/radius round trip") {
    for (int i = 0; i <= 200; ++i) {
        const double r = 1.0 + 99.0 * i / 200.0;
        CHECK(std::abs(radius_from_scatter_angle(scatter_angle_from_radius(r)) - r) <
              1e-12);
    }
}

TEST_CASE("compton energy") {
    CHECK(compton_energy(123.0, 0.0) == doctest::Approx(123.0).epsilon(1e-14));
    CHECK(compton_energy(511.0, kPi / 2) == doctest::Approx(255.5).epsilon(1e-5));
    CHECK(compton_energy(511.0, kPi) == doctest::Approx(511.0 / 3.0).epsilon(1e-5));
    // monotone decreasing in omega
    double prev = compton_energy(200.0, 0.0);
    for (int i = 1; i <= 16; ++i) {
        const double e = compton_energy(200.0, i * kPi / 16);
        CHECK(e < prev);
        prev = e;
    }
    CHECK_THROWS_AS(compton_energy(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(compton_energy(100.0, 4.0), std::domain_error);
}

TEST_CASE("build_scan_grid axes") {
    ScanGeometry geom;
    geom.x0_max = 3.0;
    geom.delta_x0 = 1.0;
    geom.r_max = 3.0;
    geom.delta_r = 1.0;
    const ScanGrid grid = build_scan_grid(geom);
    REQUIRE(grid.x0_axis.size() == 7);
    CHECK(grid.x0_axis.front() == -3.0);
    CHECK(grid.x0_axis.back() == 3.0);
    REQUIRE(grid.r_axis.size() == 2);
    CHECK(grid.r_axis[0] == 2.0);
    CHECK(grid.r_axis[1] == 3.0);

    // symmetry and strict monotonicity
    for (std::size_t k = 0; k < grid.x0_axis.size(); ++k)
        CHECK(grid.x0_axis[k] == -grid.x0_axis[grid.x0_axis.size() - 1 - k]);
    for (std::size_t k = 1; k < grid.x0_axis.size(); ++k)
        CHECK(grid.x0_axis[k] > grid.x0_axis[k - 1]);

    SUBCASE("derived counts match") {
        CHECK(geom.n_source_detector() == 7);
        CHECK(geom.n_radii() == 2);
    }
    SUBCASE("zero step rejected") {
        geom.delta_x0 = 0.0;
        CHECK_THROWS_AS(build_scan_grid(geom), std::invalid_argument);
    }
    SUBCASE("empty radius axis rejected") {
        geom.r_max = 1.5;
        CHECK_THROWS_AS(build_scan_grid(geom), std::invalid_argument);
    }
}

TEST_CASE("arc_points geometry") {
    const double r = 2.0;
    const double arc_step = 0.5;
    const auto pts = arc_points(0.25, r, arc_step);
    REQUIRE(pts.size() % 4 == 0);

    SUBCASE("total weight matches the analytic arc length") {
        double total = 0.0;
        for (const auto& p : pts) total += p.weight;
        const double analytic = 4.0 * r * (kPi / 2 - std::asin(1.0 / r));
        CHECK(std::abs(total - analytic) <= 4.0 * r * (arc_step / r) + 1e-12);
    }
    SUBCASE("every weight equals r*dtheta exactly") {
        const double w = r * (arc_step / r);
        for (const auto& p : pts) CHECK(p.weight == w);
    }
    SUBCASE("z1 range [1, r]") {
        for (const auto& p : pts) {
            CHECK(p.z1 >= 1.0 - 1e-12);
            CHECK(p.z1 <= r + 1e-12);
        }
    }
    SUBCASE("points lie on the two supporting circles") {
        const double a = std::sqrt(r * r - 1.0);
        for (const auto& p : pts) {
            const double d1 = std::abs((p.x - 0.25 - a) * (p.x - 0.25 - a) + p.z1 * p.z1 - r * r);
            const double d2 = std::abs((p.x - 0.25 + a) * (p.x - 0.25 + a) + p.z1 * p.z1 - r * r);
            CHECK(std::min(d1, d2) < 1e-9);
        }
    }
    SUBCASE("halving arc_step doubles the theta sample count up to one") {
        const auto fine = arc_points(0.25, r, arc_step / 2);
        const auto k = static_cast<long>(pts.size() / 4);
        const auto k2 = static_cast<long>(fine.size() / 4);
        CHECK(std::abs(k2 - 2 * k) <= 1);
    }
    SUBCASE("degenerate radius rejected") {
        CHECK_THROWS_AS(arc_points(0.0, 1.0, 0.5), std::domain_error);
        CHECK_THROWS_AS(arc_points(0.0, 0.5, 0.5), std::domain_error);
    }
}

TEST_CASE("flip_frame is a pure axis relabel") {
    const double delta = 3.0;
    ImageGrid img = ImageGrid::zeros(8, 8, delta);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) img.at(j, i) = 10.0 * j + i;

    const ImageGrid f1 = flip_frame(img);
    CHECK(f1.frame == Frame::FlippedF1);
    CHECK(f1.z_coord(0) == doctest::Approx(1.0 + delta));
    CHECK(img.z_coord(0) == doctest::Approx(1.0 - delta));

    const ImageGrid back = flip_frame(f1);
    CHECK(back.frame == Frame::PhysicalF);
    CHECK(back.values == img.values);
    CHECK(back.delta == img.delta);

    // f(x=0, z=-delta) == f1(x=0, z1=2+delta): both live in row 1
    const int i0 = 3;  // x_coord(3) == 0 for nx=8
    CHECK(img.x_coord(i0) == 0.0);
    CHECK(img.z_coord(1) == doctest::Approx(-delta));
    CHECK(f1.z_coord(1) == doctest::Approx(2.0 + delta));
    CHECK(img.at(1, i0) == f1.at(1, i0));
}

TEST_SUITE_END();
