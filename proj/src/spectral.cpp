#include "arctomo/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace arctomo {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

// Batched 1D transform along the row dimension (one transform per column).
void dft_columns(std::vector<std::complex<double>>& data, int rows, int cols, int sign) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        int n = rows;
        plan = fftw_plan_many_dft(1, &n, cols, as_fftw(data.data()), nullptr, cols, 1,
                                  as_fftw(data.data()), nullptr, cols, 1, sign,
                                  FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

void dft_2d(std::vector<std::complex<double>>& data, int rows, int cols, int sign) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(rows, cols, as_fftw(data.data()), as_fftw(data.data()),
                                sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace

double dft_frequency(int k, int m, double h) {
    const int signed_k = k < (m + 1) / 2 ? k : k - m;
    return 2.0 * kPi * signed_k / (m * h);
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

SpectralGrid fourier_x0(const Sinogram& sino, int pad_factor) {
    if (pad_factor < 1)
        throw std::invalid_argument("fourier_x0: pad_factor must be >= 1");
    const int n_sd = sino.n_sd();
    const int n_r = sino.n_r();
    if (n_sd < 1 || n_r < 1)
        throw std::invalid_argument("fourier_x0: empty sinogram");
    const int m = pad_factor * next_pow2(n_sd);
    const double dx0 = sino.geom.delta_x0;

    SpectralGrid out;
    out.rows = m;
    out.cols = n_r;
    out.values.assign(static_cast<std::size_t>(m) * n_r, {0.0, 0.0});
    for (int k = 0; k < n_sd; ++k)
        for (int l = 0; l < n_r; ++l)
            out.at(k, l) = sino.at(k, l);
    dft_columns(out.values, m, n_r, FFTW_FORWARD);

    out.axis0.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out.axis0[static_cast<std::size_t>(k)] = dft_frequency(k, m, dx0);
    out.axis1 = sino.r_axis;
    return out;
}

std::vector<double> inverse_x0_real(const SpectralGrid& spec, int keep_rows,
                                    double* imag_residue) {
    if (keep_rows < 1 || keep_rows > spec.rows)
        throw std::invalid_argument("inverse_x0_real: bad keep_rows");
    std::vector<std::complex<double>> work = spec.values;
    dft_columns(work, spec.rows, spec.cols, FFTW_BACKWARD);
    const double scale = 1.0 / spec.rows;
    std::vector<double> out(static_cast<std::size_t>(keep_rows) * spec.cols);
    double max_re = 0.0, max_im = 0.0;
    for (int k = 0; k < keep_rows; ++k) {
        for (int l = 0; l < spec.cols; ++l) {
            const std::complex<double> v = work[static_cast<std::size_t>(k) * spec.cols + l] * scale;
            out[static_cast<std::size_t>(k) * spec.cols + l] = v.real();
            max_re = std::max(max_re, std::abs(v.real()));
            max_im = std::max(max_im, std::abs(v.imag()));
        }
    }
    if (imag_residue) *imag_residue = max_re > 0.0 ? max_im / max_re : max_im;
    return out;
}

SpectralGrid fourier_2d(std::span<const double> values, int rows, int cols,
                        int pad_factor, double spacing0, double spacing1) {
    if (pad_factor < 1)
        throw std::invalid_argument("fourier_2d: pad_factor must be >= 1");
    if (static_cast<std::size_t>(rows) * cols != values.size())
        throw std::invalid_argument("fourier_2d: size mismatch");
    const int m0 = pad_factor * next_pow2(rows);
    const int m1 = pad_factor * next_pow2(cols);
    SpectralGrid out;
    out.rows = m0;
    out.cols = m1;
    out.values.assign(static_cast<std::size_t>(m0) * m1, {0.0, 0.0});
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i)
            out.at(j, i) = values[static_cast<std::size_t>(j) * cols + i];
    dft_2d(out.values, m0, m1, FFTW_FORWARD);
    out.axis0.resize(static_cast<std::size_t>(m0));
    out.axis1.resize(static_cast<std::size_t>(m1));
    for (int j = 0; j < m0; ++j) out.axis0[static_cast<std::size_t>(j)] = dft_frequency(j, m0, spacing0);
    for (int i = 0; i < m1; ++i) out.axis1[static_cast<std::size_t>(i)] = dft_frequency(i, m1, spacing1);
    return out;
}

std::vector<double> inverse_2d_real(const SpectralGrid& spec, int keep_rows,
                                    int keep_cols, double* imag_residue) {
    if (keep_rows < 1 || keep_rows > spec.rows || keep_cols < 1 || keep_cols > spec.cols)
        throw std::invalid_argument("inverse_2d_real: bad crop");
    std::vector<std::complex<double>> work = spec.values;
    dft_2d(work, spec.rows, spec.cols, FFTW_BACKWARD);
    const double scale = 1.0 / (static_cast<double>(spec.rows) * spec.cols);
    std::vector<double> out(static_cast<std::size_t>(keep_rows) * keep_cols);
    double max_re = 0.0, max_im = 0.0;
    for (int j = 0; j < keep_rows; ++j) {
        for (int i = 0; i < keep_cols; ++i) {
            const std::complex<double> v = work[static_cast<std::size_t>(j) * spec.cols + i] * scale;
            out[static_cast<std::size_t>(j) * keep_cols + i] = v.real();
            max_re = std::max(max_re, std::abs(v.real()));
            max_im = std::max(max_im, std::abs(v.imag()));
        }
    }
    if (imag_residue) *imag_residue = max_re > 0.0 ? max_im / max_re : max_im;
    return out;
}

SpectralGrid apply_arc_filter(const SpectralGrid& spec,
                              const std::vector<double>& r_axis, double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("apply_arc_filter: epsilon must be > 0");
    if (static_cast<int>(r_axis.size()) != spec.cols)
        throw std::invalid_argument("apply_arc_filter: r_axis size mismatch");
    SpectralGrid out = spec;
    const double eps2 = epsilon * epsilon;
    for (int l = 0; l < spec.cols; ++l) {
        const double r = r_axis[static_cast<std::size_t>(l)];
        if (r <= 1.0) {
            for (int k = 0; k < spec.rows; ++k) out.at(k, l) = 0.0;
            continue;
        }
        const double root = std::sqrt(r * r - 1.0);
        for (int k = 0; k < spec.rows; ++k) {
            // |xi| keeps the factor exactly even in xi
            const double c = std::cos(std::abs(spec.axis0[static_cast<std::size_t>(k)]) * root);
            out.at(k, l) *= c / (2.0 * r * (eps2 + c * c));
        }
    }
    return out;
}

SpectralGrid weight_sigma(const SpectralGrid& spec2d) {
    SpectralGrid out = spec2d;
    for (int j = 0; j < spec2d.rows; ++j) {
        const double w = 2.0 * kPi * kPi * std::abs(spec2d.axis0[static_cast<std::size_t>(j)]);
        for (int i = 0; i < spec2d.cols; ++i) out.at(j, i) *= w;
    }
    return out;
}

double bessel_j0(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j0: x must be finite");
    return std::cyl_bessel_j(0.0, std::abs(x));
}

std::complex<double> hankel_oracle(const Sinogram& gf, double xi, double eta) {
    if (!(eta >= 0.0))
        throw std::invalid_argument("hankel_oracle: eta must be >= 0");
    const double dx0 = gf.x0_axis.size() > 1 ? gf.x0_axis[1] - gf.x0_axis[0] : 1.0;
    const double dr = gf.r_axis.size() > 1 ? gf.r_axis[1] - gf.r_axis[0] : 1.0;
    std::complex<double> acc{0.0, 0.0};
    for (int l = 0; l < gf.n_r(); ++l) {
        const double r = gf.r_axis[static_cast<std::size_t>(l)];
        const double bessel_r = bessel_j0(eta * r) * r;
        double re = 0.0, im = 0.0;
        for (int k = 0; k < gf.n_sd(); ++k) {
            const double v = gf.at(k, l);
            if (v == 0.0) continue;
            const double phase = -xi * gf.x0_axis[static_cast<std::size_t>(k)];
            re += v * std::cos(phase);
            im += v * std::sin(phase);
        }
        acc += std::complex<double>(re, im) * bessel_r;
    }
    return acc * (dx0 * dr);
}

}  // namespace arctomo
