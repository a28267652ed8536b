#include "arctomo/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arctomo {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct F1View {
    const double* data;
    int nx;
    int nz;
    double x_min;
    double z1_min;

    double sample(double x, double z1) const {
        const double xi = x - x_min;
        const double zj = z1 - z1_min;
        if (xi < 0.0 || xi > nx - 1 || zj < 0.0 || zj > nz - 1) return 0.0;
        int i0 = static_cast<int>(xi);
        int j0 = static_cast<int>(zj);
        if (i0 > nx - 2) i0 = nx - 2;
        if (j0 > nz - 2) j0 = nz - 2;
        const double fx = xi - i0;
        const double fz = zj - j0;
        const double* row0 = data + static_cast<std::size_t>(j0) * nx + i0;
        const double* row1 = row0 + nx;
        return (1.0 - fz) * ((1.0 - fx) * row0[0] + fx * row0[1]) +
               fz * ((1.0 - fx) * row1[0] + fx * row1[1]);
    }
};

F1View make_f1_view(const ImageGrid& img) {
    if (img.frame != Frame::PhysicalF)
        throw std::invalid_argument("project: image must be in the physical frame");
    return {img.values.data(), img.nx, img.nz, img.x_coord(0), 1.0 + img.delta};
}

// Sum the four arc branches at one theta sample. Fixed evaluation order keeps
// per-cell results bit-reproducible.
inline double four_branch_sum(const F1View& f1, double x0, double a, double b, double z1) {
    return f1.sample(x0 + a + b, z1) + f1.sample(x0 + a - b, z1) +
           f1.sample(x0 - a + b, z1) + f1.sample(x0 - a - b, z1);
}

// Conservative k-window of the theta lattice whose samples can land inside
// the z1 hull [z1_lo, z1_hi]; samples outside contribute exactly 0.
void theta_window(double r, double theta_min, double dtheta, int count,
                  double z1_lo, double z1_hi, int& k_begin, int& k_end) {
    const double s_lo = std::min(1.0, std::max(z1_lo / r, std::sin(theta_min)));
    const double s_hi = std::min(1.0, z1_hi / r);
    if (z1_lo > r) {  // arc tops out below the object
        k_begin = 0;
        k_end = 0;
        return;
    }
    const double t_lo = std::asin(s_lo);
    const double t_hi = std::asin(s_hi);
    k_begin = std::max(0, static_cast<int>(std::floor((t_lo - theta_min) / dtheta)) - 1);
    k_end = std::min(count, static_cast<int>(std::ceil((t_hi - theta_min) / dtheta)) + 2);
}

}  // namespace

Sinogram Sinogram::zeros(const ScanGeometry& geom) {
    ScanGrid grid = build_scan_grid(geom);
    Sinogram s;
    s.x0_axis = std::move(grid.x0_axis);
    s.r_axis = std::move(grid.r_axis);
    s.geom = geom;
    s.values.assign(s.x0_axis.size() * s.r_axis.size(), 0.0);
    return s;
}

double sample_f1_bilinear(const ImageGrid& img, double x, double z1) {
    F1View view{img.values.data(), img.nx, img.nz, img.x_coord(0),
                img.frame == Frame::PhysicalF ? 1.0 + img.delta : img.z_coord(0)};
    return view.sample(x, z1);
}

Sinogram project(const ImageGrid& img, const ScanGeometry& geom) {
    const F1View f1 = make_f1_view(img);
    Sinogram sino = Sinogram::zeros(geom);
    const int n_sd = sino.n_sd();
    const int n_r = sino.n_r();
    const double z1_lo = 1.0 + img.delta;
    const double z1_hi = img.nz + img.delta;
    const double x_lo = img.x_coord(0);
    const double x_hi = img.x_coord(img.nx - 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int k = 0; k < n_sd; ++k) {
        const double x0 = sino.x0_axis[static_cast<std::size_t>(k)];
        for (int l = 0; l < n_r; ++l) {
            const double r = sino.r_axis[static_cast<std::size_t>(l)];
            if (r < z1_lo) continue;  // arc z1-range [1, r] misses the object
            const double a = std::sqrt(r * r - 1.0);
            if (x0 - 2.0 * a > x_hi || x0 + 2.0 * a < x_lo) continue;
            const ArcThetaGrid grid = make_arc_theta_grid(r, geom.arc_step);
            int k_begin, k_end;
            theta_window(r, grid.theta_min, grid.dtheta, grid.count, z1_lo, z1_hi,
                         k_begin, k_end);
            double total = 0.0;
            for (int t = k_begin; t < k_end; ++t) {
                const double theta = grid.theta_min + t * grid.dtheta;
                const double z1 = r * std::sin(theta);
                if (z1 < z1_lo || z1 > z1_hi) continue;
                total += four_branch_sum(f1, x0, a, r * std::cos(theta), z1);
            }
            sino.at(k, l) = r * grid.dtheta * total;
        }
    }
    return sino;
}

Sinogram project_oracle(const ImageGrid& img, const ScanGeometry& geom, int refine) {
    if (refine < 4)
        throw std::invalid_argument("project_oracle: refine must be >= 4");
    const F1View f1 = make_f1_view(img);
    Sinogram sino = Sinogram::zeros(geom);
    const int n_sd = sino.n_sd();
    const int n_r = sino.n_r();
    const double z1_lo = 1.0 + img.delta;
    const double z1_hi = img.nz + img.delta;
    const double x_lo = img.x_coord(0);
    const double x_hi = img.x_coord(img.nx - 1);
    const double step = geom.arc_step / refine;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int k = 0; k < n_sd; ++k) {
        const double x0 = sino.x0_axis[static_cast<std::size_t>(k)];
        for (int l = 0; l < n_r; ++l) {
            const double r = sino.r_axis[static_cast<std::size_t>(l)];
            if (r < z1_lo) continue;
            const double a = std::sqrt(r * r - 1.0);
            if (x0 - 2.0 * a > x_hi || x0 + 2.0 * a < x_lo) continue;
            const double theta_min = std::asin(1.0 / r);
            const double range = kHalfPi - theta_min;
            const int count = std::max(1, static_cast<int>(std::ceil(range / (step / r))));
            const double dtheta = range / count;
            int k_begin, k_end;
            theta_window(r, theta_min + 0.5 * dtheta, dtheta, count, z1_lo, z1_hi,
                         k_begin, k_end);
            double total = 0.0;
            for (int t = k_begin; t < k_end; ++t) {
                const double theta = theta_min + (t + 0.5) * dtheta;
                const double z1 = r * std::sin(theta);
                if (z1 < z1_lo || z1 > z1_hi) continue;
                total += four_branch_sum(f1, x0, a, r * std::cos(theta), z1);
            }
            sino.at(k, l) = r * dtheta * total;
        }
    }
    return sino;
}

}  // namespace arctomo
