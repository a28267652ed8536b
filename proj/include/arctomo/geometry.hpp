#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace arctomo {

// Fixed frame of the translational modality: the source travels on z = 3,
// the detector on z = 1, and every scanning circle is centred on z = 2.
inline constexpr double kSourceLineZ = 3.0;
inline constexpr double kDetectorLineZ = 1.0;
inline constexpr double kArcCenterZ = 2.0;

// Electron rest energy in keV, used by compton_energy only.
inline constexpr double kElectronRestEnergyKeV = 510.998950;

// Coordinate frame of an image: "physical" f lives below the detector line
// (z <= 1 - delta), "flipped" f1(x, z) = f(x, 2 - z) lives above it.
enum class Frame { PhysicalF, FlippedF1 };

// N_z x N_x pixel grid with unit pixels. Row j, column i store the value at
//   x_i = -n_x/2 + 1 + i
//   z_j = (1 - delta) - j          (PhysicalF)
//   z1_j = (1 + delta) + j         (FlippedF1)
// Both frames index the same memory: the flip relabels the z axis only.
struct ImageGrid {
    int nx = 0;
    int nz = 0;
    double delta = 0.0;
    Frame frame = Frame::PhysicalF;
    std::vector<double> values;  // row-major, nz * nx

    static ImageGrid zeros(int nx, int nz, double delta,
                           Frame frame = Frame::PhysicalF);

    double& at(int j, int i) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int j, int i) const { return values[static_cast<std::size_t>(j) * nx + i]; }

    double x_coord(int i) const { return -nx / 2.0 + 1.0 + i; }
    double z_coord(int j) const {
        return frame == Frame::PhysicalF ? (1.0 - delta) - j : (1.0 + delta) + j;
    }
    double x_min() const { return x_coord(0); }
    double x_max() const { return x_coord(nx - 1); }
};

// Scan parameter grid: sensor positions x0 in [-x0_max, x0_max] with step
// delta_x0, arc radii r = 1 + l*delta_r up to r_max. arc_step is the target
// spacing between consecutive sample points along an arc.
struct ScanGeometry {
    double x0_max = 0.0;
    double delta_x0 = 1.0;
    double r_max = 0.0;
    double delta_r = 1.0;
    double arc_step = 0.5;

    void validate() const;  // throws std::invalid_argument
    int n_source_detector() const;
    int n_radii() const;
};

struct ScanGrid {
    std::vector<double> x0_axis;
    std::vector<double> r_axis;
};

// One sample point on a scanning double arc, in f1 coordinates, with its
// elementary arc-length weight.
struct ArcSample {
    double x;
    double z1;
    double weight;
};

// r = 1/sin(pi - omega) for omega in [pi/2, pi).
double radius_from_scatter_angle(double omega);

// omega = pi - asin(1/r) for r >= 1.
double scatter_angle_from_radius(double r);

// Compton energy-angle relation E(omega) = E0 / (1 + E0/mc^2 (1 - cos omega)).
double compton_energy(double e0_kev, double omega);

ScanGrid build_scan_grid(const ScanGeometry& geom);

// Uniform theta lattice shared by the projector and arc_points:
// theta_k = asin(1/r) + k * (arc_step/r), k = 0..count-1, capped at pi/2.
struct ArcThetaGrid {
    double theta_min;
    double dtheta;
    int count;
};

inline ArcThetaGrid make_arc_theta_grid(double r, double arc_step) {
    const double theta_min = std::asin(1.0 / r);
    const double dtheta = arc_step / r;
    const double half_pi = std::acos(0.0);
    const int count = static_cast<int>(std::floor((half_pi - theta_min) / dtheta)) + 1;
    return {theta_min, dtheta, count};
}

// Samples the four half-arcs of the double circle arc (x0, r): points
// (x0 +- sqrt(r^2-1) +- r cos(theta), r sin(theta)), each weighted r*dtheta.
std::vector<ArcSample> arc_points(double x0, double r, double arc_step);

// f <-> f1 reflection about z = 1 (z1 = 2 - z). Pixel centres map to pixel
// centres, so this is a pure axis relabel; involution.
ImageGrid flip_frame(const ImageGrid& img);

}  // namespace arctomo
