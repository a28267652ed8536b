#include "arctomo/recon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arctomo {

namespace {

// Shared back-projection kernel: accumulate dx0 * interp_r(Gf(x0, .), rho)
// over all sensor positions, for `rows` z1 lattice values starting at
// z1_start (step 1). Ascending x0 order per pixel keeps sums reproducible.
std::vector<double> backproject_span(const Sinogram& gf, int nx, double z1_start,
                                     int rows) {
    const int n_sd = gf.n_sd();
    const int n_r = gf.n_r();
    if (n_r < 2)
        throw std::invalid_argument("backproject: need at least two radii");
    const double dx0 = gf.geom.delta_x0;
    const double dr = gf.geom.delta_r;
    const double r_lo = gf.r_axis.front();
    const double r_hi = gf.r_axis.back();
    const double x_min = -nx / 2.0 + 1.0;

    std::vector<double> out(static_cast<std::size_t>(rows) * nx, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < rows; ++j) {
        const double z1 = z1_start + j;
        const double z2 = z1 * z1;
        double* row = out.data() + static_cast<std::size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
            const double x = x_min + i;
            double acc = 0.0;
            for (int k = 0; k < n_sd; ++k) {
                const double dx = x - gf.x0_axis[static_cast<std::size_t>(k)];
                const double rho = std::sqrt(dx * dx + z2);
                if (rho < r_lo || rho > r_hi) continue;
                const double pos = (rho - r_lo) / dr;
                int l0 = static_cast<int>(pos);
                if (l0 > n_r - 2) l0 = n_r - 2;
                const double fr = pos - l0;
                acc += (1.0 - fr) * gf.at(k, l0) + fr * gf.at(k, l0 + 1);
            }
            row[i] = acc * dx0;
        }
    }
    return out;
}

}  // namespace

void ReconConfig::validate() const {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("ReconConfig: epsilon must be > 0");
    if (pad_factor < 1)
        throw std::invalid_argument("ReconConfig: pad_factor must be >= 1");
    if (!(calibration > 0.0))
        throw std::invalid_argument("ReconConfig: calibration must be > 0");
}

Sinogram filter_sinogram(const Sinogram& sino, const ReconConfig& cfg,
                         double* imag_residue) {
    cfg.validate();
    SpectralGrid spec = fourier_x0(sino, cfg.pad_factor);
    spec = apply_arc_filter(spec, sino.r_axis, cfg.epsilon);
    Sinogram gf = sino;
    gf.values = inverse_x0_real(spec, sino.n_sd(), imag_residue);
    return gf;
}

ImageGrid backproject(const Sinogram& gf, int n, double delta) {
    if (n < 1)
        throw std::invalid_argument("backproject: n must be >= 1");
    ImageGrid out = ImageGrid::zeros(n, n, delta, Frame::FlippedF1);
    out.values = backproject_span(gf, n, 1.0 + delta, n);
    return out;
}

ImageGrid deconvolve(const ImageGrid& bp, const ReconConfig& cfg,
                     double* imag_residue) {
    cfg.validate();
    for (double v : bp.values)
        if (!std::isfinite(v)) throw std::invalid_argument("deconvolve: non-finite input");
    SpectralGrid spec = fourier_2d(bp.values, bp.nz, bp.nx, cfg.pad_factor, 1.0, 1.0);
    spec = weight_sigma(spec);
    ImageGrid out = bp;
    out.values = inverse_2d_real(spec, bp.nz, bp.nx, imag_residue);
    for (double& v : out.values) v *= cfg.calibration;
    return out;
}

ImageGrid reconstruct(const Sinogram& sino, int n, double delta,
                      const ReconConfig& cfg) {
    cfg.validate();
    const Sinogram gf = filter_sinogram(sino, cfg);

    // G# is supported in |z1| <= r_max + dr and even in z1; cover the half
    // plane from the z1 lattice point nearest 0 down past the deepest radius,
    // so the sigma filter never sees an artificial cut except at z1 ~ 0.
    const double z1_top = 1.0 + delta;
    const int t_lo = -static_cast<int>(std::floor(z1_top));
    const double reach = gf.r_axis.back() + gf.geom.delta_r;
    const int t_hi = std::max(n - 1, static_cast<int>(std::ceil(reach - z1_top)));
    const int rows = t_hi - t_lo + 1;

    ImageGrid tall = ImageGrid::zeros(n, rows, delta, Frame::FlippedF1);
    tall.values = backproject_span(gf, n, z1_top + t_lo, rows);
    const ImageGrid filtered = deconvolve(tall, cfg);

    ImageGrid out = ImageGrid::zeros(n, n, delta, Frame::FlippedF1);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            out.at(j, i) = filtered.at(j - t_lo, i);
    return flip_frame(out);
}

}  // namespace arctomo
