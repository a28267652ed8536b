#include "arctomo/geometry.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace arctomo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGridEps = 1e-9;  // guard against FP drop-off in floor()
}  // namespace

ImageGrid ImageGrid::zeros(int nx, int nz, double delta, Frame frame) {
    if (nx <= 0 || nz <= 0)
        throw std::invalid_argument("ImageGrid: dimensions must be positive");
    ImageGrid g;
    g.nx = nx;
    g.nz = nz;
    g.delta = delta;
    g.frame = frame;
    g.values.assign(static_cast<std::size_t>(nx) * nz, 0.0);
    return g;
}

void ScanGeometry::validate() const {
    if (delta_x0 <= 0.0)
        throw std::invalid_argument("ScanGeometry: delta_x0 must be > 0");
    if (delta_r <= 0.0)
        throw std::invalid_argument("ScanGeometry: delta_r must be > 0");
    if (arc_step <= 0.0)
        throw std::invalid_argument("ScanGeometry: arc_step must be > 0");
    if (x0_max < 0.0)
        throw std::invalid_argument("ScanGeometry: x0_max must be >= 0");
    if (!(r_max > 1.0 + delta_r))
        throw std::invalid_argument("ScanGeometry: r_max must exceed 1 + delta_r");
    // The x0 axis is symmetric about 0 and must end exactly at +-x0_max.
    const double steps = x0_max / delta_x0;
    if (std::abs(steps - std::round(steps)) > 1e-9 * (1.0 + steps))
        throw std::invalid_argument(
            "ScanGeometry: x0_max must be an integer multiple of delta_x0");
}

int ScanGeometry::n_source_detector() const {
    return static_cast<int>(std::floor(2.0 * x0_max / delta_x0 + kGridEps)) + 1;
}

int ScanGeometry::n_radii() const {
    return static_cast<int>(std::floor((r_max - 1.0) / delta_r + kGridEps));
}

double radius_from_scatter_angle(double omega) {
    if (!(omega >= kPi / 2.0) || !(omega < kPi))
        throw std::domain_error("radius_from_scatter_angle: omega must be in [pi/2, pi)");
    return 1.0 / std::sin(kPi - omega);
}

double scatter_angle_from_radius(double r) {
    if (!(r >= 1.0))
        throw std::domain_error("scatter_angle_from_radius: r must be >= 1");
    return kPi - std::asin(1.0 / r);
}

double compton_energy(double e0_kev, double omega) {
    if (!(e0_kev > 0.0))
        throw std::domain_error("compton_energy: e0 must be > 0");
    if (!(omega >= 0.0) || !(omega <= kPi))
        throw std::domain_error("compton_energy: omega must be in [0, pi]");
    return e0_kev / (1.0 + e0_kev / kElectronRestEnergyKeV * (1.0 - std::cos(omega)));
}

ScanGrid build_scan_grid(const ScanGeometry& geom) {
    geom.validate();
    ScanGrid grid;
    const int half = static_cast<int>(std::round(geom.x0_max / geom.delta_x0));
    grid.x0_axis.reserve(2 * half + 1);
    for (int k = -half; k <= half; ++k)
        grid.x0_axis.push_back(k * geom.delta_x0);
    const int nr = geom.n_radii();
    if (nr < 1)
        throw std::invalid_argument("build_scan_grid: empty radius axis");
    grid.r_axis.reserve(nr);
    for (int l = 1; l <= nr; ++l)
        grid.r_axis.push_back(1.0 + l * geom.delta_r);
    return grid;
}

std::vector<ArcSample> arc_points(double x0, double r, double arc_step) {
    if (!(r > 1.0))
        throw std::domain_error("arc_points: r must be > 1");
    if (!(arc_step > 0.0))
        throw std::invalid_argument("arc_points: arc_step must be > 0");
    const ArcThetaGrid grid = make_arc_theta_grid(r, arc_step);
    const double a = std::sqrt(r * r - 1.0);
    const double w = r * grid.dtheta;
    std::vector<ArcSample> samples;
    samples.reserve(static_cast<std::size_t>(grid.count) * 4);
    for (int k = 0; k < grid.count; ++k) {
        const double theta = grid.theta_min + k * grid.dtheta;
        const double b = r * std::cos(theta);
        const double z1 = r * std::sin(theta);
        samples.push_back({x0 + a + b, z1, w});
        samples.push_back({x0 + a - b, z1, w});
        samples.push_back({x0 - a + b, z1, w});
        samples.push_back({x0 - a - b, z1, w});
    }
    return samples;
}

ImageGrid flip_frame(const ImageGrid& img) {
    ImageGrid out = img;
    out.frame = img.frame == Frame::PhysicalF ? Frame::FlippedF1 : Frame::PhysicalF;
    return out;
}

}  // namespace arctomo
