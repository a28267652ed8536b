#pragma once

#include <complex>
#include <span>
#include <vector>

#include "arctomo/forward.hpp"

namespace arctomo {

// Complex matrix over physical angular frequencies. Storage uses the native
// DFT bin ordering (no fftshift); axis0/axis1 hold the signed physical value
// of each bin, so consumers never reason about bin indices.
struct SpectralGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> values;  // row-major
    std::vector<double> axis0;  // frequency (or radius) per row
    std::vector<double> axis1;  // frequency (or radius) per column

    std::complex<double>& at(int j, int i) {
        return values[static_cast<std::size_t>(j) * cols + i];
    }
    std::complex<double> at(int j, int i) const {
        return values[static_cast<std::size_t>(j) * cols + i];
    }
};

// Signed DFT frequency of bin k for sample count m and spacing h:
// 2*pi*k'/(m*h), k' in [-m/2, m/2).
double dft_frequency(int k, int m, double h);

int next_pow2(int n);

// DFT along x0 (zero-padded to pad_factor * next_pow2(N_SD)) per r column.
// axis0 = physical xi frequencies, axis1 = r values.
SpectralGrid fourier_x0(const Sinogram& sino, int pad_factor);

// Normalized inverse of fourier_x0, cropped back to keep_rows rows; returns
// the real part and optionally the largest |imag|/max|real| residue.
std::vector<double> inverse_x0_real(const SpectralGrid& spec, int keep_rows,
                                    double* imag_residue = nullptr);

// Zero-padded 2D DFT of a real matrix; spacing0/spacing1 give the physical
// sample spacings used for the frequency axes.
SpectralGrid fourier_2d(std::span<const double> values, int rows, int cols,
                        int pad_factor, double spacing0, double spacing1);

std::vector<double> inverse_2d_real(const SpectralGrid& spec, int keep_rows,
                                    int keep_cols, double* imag_residue = nullptr);

// Arc filter G^(xi, r) = R^(xi, r)/(2r) * cos(xi*sqrt(r^2-1)) /
// (eps^2 + cos^2(xi*sqrt(r^2-1))); rows with r <= 1 are zeroed.
SpectralGrid apply_arc_filter(const SpectralGrid& spec,
                              const std::vector<double>& r_axis, double epsilon);

// Ramp weight along the depth frequency: entry *= 2*pi^2*|sigma_row|.
SpectralGrid weight_sigma(const SpectralGrid& spec2d);

// Bessel function of the first kind, order zero.
double bessel_j0(double x);

// Test oracle: H0 G^f(xi, eta) = sum Gf(x0, r) J0(eta r) r e^{-i xi x0} dx0 dr
// by direct Riemann quadrature over the sinogram grid.
std::complex<double> hankel_oracle(const Sinogram& gf, double xi, double eta);

}  // namespace arctomo
