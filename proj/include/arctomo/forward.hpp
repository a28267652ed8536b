#pragma once

#include <vector>

#include "arctomo/geometry.hpp"

namespace arctomo {

// Projection data R_D f(x0, r): one row per sensor position, one column per
// arc radius.
struct Sinogram {
    std::vector<double> values;  // row-major, n_sd * n_r
    std::vector<double> x0_axis;
    std::vector<double> r_axis;
    ScanGeometry geom;

    int n_sd() const { return static_cast<int>(x0_axis.size()); }
    int n_r() const { return static_cast<int>(r_axis.size()); }
    double& at(int k, int l) { return values[static_cast<std::size_t>(k) * r_axis.size() + l]; }
    double at(int k, int l) const { return values[static_cast<std::size_t>(k) * r_axis.size() + l]; }

    static Sinogram zeros(const ScanGeometry& geom);
};

// Bilinear sample of an image interpreted in the f1 frame (row j at
// z1 = 1 + delta + j). Returns 0 outside the pixel-centre hull, so arcs with
// r < 1 + delta never see the object.
double sample_f1_bilinear(const ImageGrid& img, double x, double z1);

// Discrete theta-sum projector: for each (x0, r) cell sums the four arc
// branches over the shared theta lattice and scales by r * dtheta.
Sinogram project(const ImageGrid& img, const ScanGeometry& geom);

// Independent quadrature reference: midpoint rule along each half-arc at
// spacing arc_step/refine with exact coverage of [asin(1/r), pi/2].
Sinogram project_oracle(const ImageGrid& img, const ScanGeometry& geom, int refine);

}  // namespace arctomo
