#pragma once

#include <array>
#include <vector>

#include "arctomo/geometry.hpp"

namespace arctomo {

enum class PhantomKind { Derenzo, Disks, Point, Box };

struct Disk {
    double cx;
    double cz;
    double radius;
    double intensity;
};

// Deterministic test objects. Coordinates are physical-frame (x, z) values;
// the derenzo layout is expressed relative to the image centre.
struct PhantomSpec {
    PhantomKind kind = PhantomKind::Derenzo;

    // derenzo
    double outer_radius_fraction = 0.42;
    std::array<double, 6> sector_disk_radii = {0.02, 0.025, 0.03, 0.035, 0.045, 0.06};
    double spacing_factor = 4.0;

    // disks
    std::vector<Disk> disks;

    // point
    double point_x = 0.0;
    double point_z = 0.0;
    double point_intensity = 1.0;

    // box
    double box_x_lo = 0.0, box_x_hi = 0.0;
    double box_z_lo = 0.0, box_z_hi = 0.0;
    double box_intensity = 1.0;

    static PhantomSpec derenzo() { return {}; }
    static PhantomSpec from_disks(std::vector<Disk> d);
    static PhantomSpec point(double x, double z, double intensity);
    static PhantomSpec box(double x_lo, double x_hi, double z_lo, double z_hi,
                           double intensity);
};

// Rasterizes the phantom onto an n x n physical-frame grid with gap delta.
// A pixel belongs to a disk iff its centre does; no anti-aliasing.
ImageGrid generate_phantom(const PhantomSpec& spec, int n, double delta);

}  // namespace arctomo
