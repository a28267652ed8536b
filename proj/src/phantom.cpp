#include "arctomo/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arctomo {

namespace {

constexpr double kPi = std::numbers::pi;

// Paint a disk; a pixel is inside iff its centre is. Throws if any part of
// the disk leaves the pixel area of the image.
void rasterize_disk(ImageGrid& img, const Disk& d) {
    if (d.radius <= 0.0)
        throw std::invalid_argument("phantom: disk radius must be > 0");
    if (d.intensity < 0.0)
        throw std::invalid_argument("phantom: intensity must be >= 0");
    const double x_lo = img.x_coord(0) - 0.5, x_hi = img.x_coord(img.nx - 1) + 0.5;
    const double z_top = img.z_coord(0) + 0.5, z_bot = img.z_coord(img.nz - 1) - 0.5;
    if (d.cx - d.radius < x_lo || d.cx + d.radius > x_hi ||
        d.cz + d.radius > z_top || d.cz - d.radius < z_bot)
        throw std::invalid_argument("phantom: disk outside the image box");

    // z decreases with row index; restrict loops to the bounding box
    const int j_lo = std::max(0, static_cast<int>(std::floor((1.0 - img.delta) - (d.cz + d.radius))));
    const int j_hi = std::min(img.nz - 1, static_cast<int>(std::ceil((1.0 - img.delta) - (d.cz - d.radius))));
    const int i_lo = std::max(0, static_cast<int>(std::floor((d.cx - d.radius) - img.x_coord(0))));
    const int i_hi = std::min(img.nx - 1, static_cast<int>(std::ceil((d.cx + d.radius) - img.x_coord(0))));
    const double r2 = d.radius * d.radius;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double dz = img.z_coord(j) - d.cz;
        for (int i = i_lo; i <= i_hi; ++i) {
            const double dx = img.x_coord(i) - d.cx;
            if (dx * dx + dz * dz <= r2) img.at(j, i) = d.intensity;
        }
    }
}

void fill_derenzo(ImageGrid& img, const PhantomSpec& spec) {
    const int n = img.nx;
    const double cx = (img.x_coord(0) + img.x_coord(n - 1)) / 2.0;
    const double cz = (img.z_coord(0) + img.z_coord(n - 1)) / 2.0;
    const double outer = spec.outer_radius_fraction * n;

    for (int s = 0; s < 6; ++s) {
        const double radius = spec.sector_disk_radii[static_cast<std::size_t>(s)] * n;
        if (radius <= 0.0)
            throw std::invalid_argument("phantom: derenzo disk radius must be > 0");
        const double d = spec.spacing_factor * radius;
        const double phi = (s + 0.5) * kPi / 3.0;   // sector bisector
        const double eux = std::cos(phi), euz = std::sin(phi);
        const double evx = -std::sin(phi), evz = std::cos(phi);
        const double a0 = s * kPi / 3.0, a1 = (s + 1) * kPi / 3.0;
        const double r0x = std::cos(a0), r0z = std::sin(a0);
        const double r1x = std::cos(a1), r1z = std::sin(a1);

        for (int m = 0;; ++m) {
            const double u = d + m * (std::sqrt(3.0) / 2.0) * d;
            if (u - radius > outer) break;
            for (int t = 0; t <= m; ++t) {
                const double v = (t - m / 2.0) * d;
                const double px = u * eux + v * evx;
                const double pz = u * euz + v * evz;
                const double dist = std::hypot(px, pz);
                if (dist + radius + 1.0 > outer) continue;
                // clearance to both sector boundary rays
                auto ray_dist = [&](double rx, double rz) {
                    return px * rx + pz * rz > 0.0 ? std::abs(px * rz - pz * rx) : dist;
                };
                if (ray_dist(r0x, r0z) < radius + 0.5) continue;
                if (ray_dist(r1x, r1z) < radius + 0.5) continue;
                rasterize_disk(img, {cx + px, cz + pz, radius, 1.0});
            }
        }
    }
}

}  // namespace

PhantomSpec PhantomSpec::from_disks(std::vector<Disk> d) {
    PhantomSpec s;
    s.kind = PhantomKind::Disks;
    s.disks = std::move(d);
    return s;
}

PhantomSpec PhantomSpec::point(double x, double z, double intensity) {
    PhantomSpec s;
    s.kind = PhantomKind::Point;
    s.point_x = x;
    s.point_z = z;
    s.point_intensity = intensity;
    return s;
}

PhantomSpec PhantomSpec::box(double x_lo, double x_hi, double z_lo, double z_hi,
                             double intensity) {
    PhantomSpec s;
    s.kind = PhantomKind::Box;
    s.box_x_lo = x_lo;
    s.box_x_hi = x_hi;
    s.box_z_lo = z_lo;
    s.box_z_hi = z_hi;
    s.box_intensity = intensity;
    return s;
}

ImageGrid generate_phantom(const PhantomSpec& spec, int n, double delta) {
    if (n < 16)
        throw std::invalid_argument("generate_phantom: n must be >= 16");
    if (delta < 0.0)
        throw std::invalid_argument("generate_phantom: delta must be >= 0");
    ImageGrid img = ImageGrid::zeros(n, n, delta);

    switch (spec.kind) {
        case PhantomKind::Derenzo:
            fill_derenzo(img, spec);
            break;
        case PhantomKind::Disks:
            for (const Disk& d : spec.disks) rasterize_disk(img, d);
            break;
        case PhantomKind::Point: {
            if (spec.point_intensity < 0.0)
                throw std::invalid_argument("phantom: intensity must be >= 0");
            const int i = static_cast<int>(std::lround(spec.point_x - img.x_coord(0)));
            const int j = static_cast<int>(std::lround((1.0 - delta) - spec.point_z));
            if (i < 0 || i >= n || j < 0 || j >= n)
                throw std::invalid_argument("phantom: point outside the image box");
            img.at(j, i) = spec.point_intensity;
            break;
        }
        case PhantomKind::Box: {
            if (spec.box_intensity < 0.0)
                throw std::invalid_argument("phantom: intensity must be >= 0");
            if (spec.box_x_lo > spec.box_x_hi || spec.box_z_lo > spec.box_z_hi)
                throw std::invalid_argument("phantom: malformed box");
            if (spec.box_x_lo < img.x_coord(0) - 0.5 || spec.box_x_hi > img.x_coord(n - 1) + 0.5 ||
                spec.box_z_hi > img.z_coord(0) + 0.5 || spec.box_z_lo < img.z_coord(n - 1) - 0.5)
                throw std::invalid_argument("phantom: box outside the image box");
            for (int j = 0; j < n; ++j) {
                const double z = img.z_coord(j);
                if (z < spec.box_z_lo || z > spec.box_z_hi) continue;
                for (int i = 0; i < n; ++i) {
                    const double x = img.x_coord(i);
                    if (x >= spec.box_x_lo && x <= spec.box_x_hi)
                        img.at(j, i) = spec.box_intensity;
                }
            }
            break;
        }
    }
    return img;
}

}  // namespace arctomo
