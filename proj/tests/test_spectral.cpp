#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "arctomo/spectral.hpp"

using namespace arctomo;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent J0 reference: trapezoid of (1/pi) integral of cos(x sin t) over
// one period; exponentially accurate once the oscillation is resolved.
double j0_quadrature(double x, int panels = 0) {
    const int m = panels > 0 ? panels : 2 * static_cast<int>(std::ceil(std::abs(x))) + 64;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += std::cos(x * std::sin(kPi * i / m));
    return acc / m;
}

Sinogram manual_sinogram(std::vector<double> x0_axis, std::vector<double> r_axis) {
    Sinogram s;
    s.geom.x0_max = std::abs(x0_axis.back());
    s.geom.delta_x0 = x0_axis.size() > 1 ? x0_axis[1] - x0_axis[0] : 1.0;
    s.geom.delta_r = r_axis.size() > 1 ? r_axis[1] - r_axis[0] : 1.0;
    s.geom.r_max = r_axis.back();
    s.x0_axis = std::move(x0_axis);
    s.r_axis = std::move(r_axis);
    s.values.assign(s.x0_axis.size() * s.r_axis.size(), 0.0);
    return s;
}

std::vector<double> linspace_axis(double start, double step, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = start + i * step;
    return v;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("impulse column has a flat magnitude spectrum") {
    Sinogram s = manual_sinogram(linspace_axis(-8, 1, 17), {2.0, 3.0});
    s.at(5, 0) = 1.0;
    const SpectralGrid spec = fourier_x0(s, 2);
    for (int k = 0; k < spec.rows; ++k)
        CHECK(std::abs(spec.at(k, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("constant column concentrates at xi = 0") {
    // 64 samples, pad_factor 1: the padded length equals the data length
    Sinogram s = manual_sinogram(linspace_axis(-31.5, 1, 64), {2.0});
    for (int k = 0; k < 64; ++k) s.at(k, 0) = 3.0;
    const SpectralGrid spec = fourier_x0(s, 1);
    REQUIRE(spec.rows == 64);
    const double peak = std::abs(spec.at(0, 0));
    CHECK(peak == doctest::Approx(3.0 * 64).epsilon(1e-12));
    for (int k = 1; k < spec.rows; ++k) CHECK(std::abs(spec.at(k, 0)) < 1e-10 * peak);
}

TEST_CASE("sampled gaussian matches its aliased analytic transform") {
    const int n_sd = 65;
    Sinogram s = manual_sinogram(linspace_axis(-32, 1, n_sd), {2.0});
    for (int k = 0; k < n_sd; ++k)
        s.at(k, 0) = std::exp(-0.5 * s.x0_axis[k] * s.x0_axis[k]);
    const SpectralGrid spec = fourier_x0(s, 2);
    REQUIRE(spec.rows >= 256);

    const double x0_start = s.x0_axis.front();
    for (int k = 0; k < spec.rows; ++k) {
        const double xi = spec.axis0[k];
        if (std::abs(xi) > 2.0) continue;
        // continuous-transform estimate: dx0 * e^{-i xi x0_start} * DFT bin
        const std::complex<double> ft =
            spec.at(k, 0) * std::polar(1.0, -xi * x0_start);
        double expect = 0.0;  // Poisson-summed transform of the sampled gaussian
        for (int m = -3; m <= 3; ++m) {
            const double u = xi + 2.0 * kPi * m;
            expect += std::sqrt(2.0 * kPi) * std::exp(-0.5 * u * u);
        }
        CHECK(std::abs(ft.real() - expect) <= 1e-6 * expect);
        CHECK(std::abs(ft.imag()) <= 1e-6 * expect);
    }
}

TEST_CASE("fourier_x0 round trip") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Sinogram s = manual_sinogram(linspace_axis(-10, 1, 21), {2.0, 3.0, 4.0});
    for (double& v : s.values) v = dist(rng);
    const SpectralGrid spec = fourier_x0(s, 2);
    const std::vector<double> back = inverse_x0_real(spec, s.n_sd());
    for (std::size_t i = 0; i < s.values.size(); ++i)
        CHECK(std::abs(back[i] - s.values[i]) < 1e-10);
}

TEST_CASE("fourier_2d round trip") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int rows = 12, cols = 9;
    std::vector<double> data(rows * cols);
    for (double& v : data) v = dist(rng);
    const SpectralGrid spec = fourier_2d(data, rows, cols, 2, 1.0, 1.0);
    double residue = 0.0;
    const std::vector<double> back = inverse_2d_real(spec, rows, cols, &residue);
    for (std::size_t i = 0; i < data.size(); ++i)
        CHECK(std::abs(back[i] - data[i]) < 1e-10);
}

TEST_CASE("arc filter entries") {
    SpectralGrid spec;
    spec.rows = 3;
    spec.cols = 2;
    spec.axis0 = {0.0, kPi / 2.0 / std::sqrt(3.0), -kPi / 2.0 / std::sqrt(3.0)};
    spec.axis1 = {2.0, 2.0};
    spec.values.assign(6, {1.0, 0.0});

    SUBCASE("zero input stays zero") {
        SpectralGrid z = spec;
        z.values.assign(6, {0.0, 0.0});
        const SpectralGrid out = apply_arc_filter(z, {2.0, 2.0}, 0.01);
        for (const auto& v : out.values) CHECK(std::abs(v) == 0.0);
    }
    SUBCASE("dc entry value") {
        const SpectralGrid out = apply_arc_filter(spec, {2.0, 2.0}, 0.01);
        CHECK(out.at(0, 0).real() == doctest::Approx(0.24997500249975).epsilon(1e-12));
    }
    SUBCASE("cosine zero suppressed") {
        // xi*sqrt(r^2-1) = pi/2 for r = 2
        const SpectralGrid out = apply_arc_filter(spec, {2.0, 2.0}, 0.01);
        CHECK(std::abs(out.at(1, 0)) < 1e-11);
    }
    SUBCASE("factor is even in xi") {
        const SpectralGrid out = apply_arc_filter(spec, {2.0, 2.0}, 0.01);
        CHECK(out.at(1, 0) == out.at(2, 0));
    }
    SUBCASE("rows with r <= 1 are zeroed") {
        const SpectralGrid out = apply_arc_filter(spec, {0.5, 2.0}, 0.01);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(out.at(k, 0)) == 0.0);
    }
    SUBCASE("epsilon must be positive") {
        CHECK_THROWS_AS(apply_arc_filter(spec, {2.0, 2.0}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(apply_arc_filter(spec, {2.0, 2.0}, -0.5), std::invalid_argument);
    }
}

TEST_CASE("regularized filter approaches the exact reciprocal as eps shrinks") {
    const double eps = 0.01;
    for (double c : {0.1, 0.25, 0.5, 0.9, 1.0}) {
        const double reg = c / (eps * eps + c * c);
        const double rel = std::abs(reg * c - 1.0);
        CHECK(rel <= eps * eps / (c * c) + 1e-15);
    }
}

TEST_CASE("sigma weighting") {
    SpectralGrid spec;
    spec.rows = 4;
    spec.cols = 1;
    spec.axis0 = {0.0, 1.0, -1.0, 2.0};
    spec.axis1 = {0.0};
    spec.values = {{1.0, 2.0}, {1.0, 0.0}, {1.0, 0.0}, {0.5, -0.5}};
    const SpectralGrid out = weight_sigma(spec);
    CHECK(std::abs(out.at(0, 0)) == 0.0);
    CHECK(out.at(1, 0).real() == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
    CHECK(out.at(1, 0) == out.at(2, 0));
    CHECK(out.at(3, 0).real() == doctest::Approx(4.0 * kPi * kPi * 0.5).epsilon(1e-14));
}

TEST_CASE("sigma weighting keeps real fields real") {
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int rows = 16, cols = 8;
    std::vector<double> data(rows * cols);
    for (double& v : data) v = dist(rng);
    const SpectralGrid spec = fourier_2d(data, rows, cols, 1, 1.0, 1.0);
    const SpectralGrid weighted = weight_sigma(spec);
    double residue = 1.0;
    inverse_2d_real(weighted, rows, cols, &residue);
    CHECK(residue < 1e-10);
}

TEST_CASE("bessel j0 against the integral representation") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-8);
    CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976866).epsilon(1e-8));
    for (double x = 0.0; x <= 500.0; x += 13.7)
        CHECK(std::abs(bessel_j0(x) - j0_quadrature(x)) < 1e-8);
    CHECK(std::abs(bessel_j0(500.0) - j0_quadrature(500.0)) < 1e-8);
    CHECK(bessel_j0(-1.0) == bessel_j0(1.0));
    CHECK_THROWS_AS(bessel_j0(std::nan("")), std::domain_error);
}

TEST_CASE("hankel oracle on a single cell") {
    Sinogram gf = manual_sinogram(linspace_axis(-1, 1, 3), {2.0, 3.0});
    SUBCASE("zero data") {
        CHECK(std::abs(hankel_oracle(gf, 0.3, 1.0)) == 0.0);
    }
    SUBCASE("one cell at x0 = 0") {
        gf.at(1, 0) = 1.0;  // x0 = 0, r = 2
        for (double eta : {0.0, 0.4, 1.3}) {
            const std::complex<double> h = hankel_oracle(gf, 0.7, eta);
            const double expect = 2.0 * bessel_j0(eta * 2.0) * 1.0 * 1.0;
            CHECK(h.real() == doctest::Approx(expect).epsilon(1e-12));
            CHECK(std::abs(h.imag()) < 1e-14);
        }
        CHECK_THROWS_AS(hankel_oracle(gf, 0.0, -1.0), std::invalid_argument);
    }
}

TEST_SUITE_END();
