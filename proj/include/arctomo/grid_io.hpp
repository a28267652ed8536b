#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "arctomo/forward.hpp"
#include "arctomo/geometry.hpp"

namespace arctomo {

// Malformed or truncated grid file; carries the byte offset of the problem.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

using Grid = std::variant<ImageGrid, Sinogram>;

// Binary "ARCG" container, little-endian:
//   magic[4] version:u32 kind:u8 rows:u32 cols:u32
//   axis0_start axis0_step axis1_start axis1_step : f64
//   rows*cols f64 values, row-major
// kind 0 = image (axis0 = z, axis1 = x), kind 1 = sinogram (axis0 = x0,
// axis1 = r).
void write_grid(const ImageGrid& img, const std::string& path);
void write_grid(const Sinogram& sino, const std::string& path);
void write_grid(const Grid& grid, const std::string& path);

Grid read_grid(const std::string& path);

// 8-bit binary PGM (P5) with linear min-max normalization; constant grids
// render as all zeros. Row 0 of the grid is the top image row.
void render(const ImageGrid& img, const std::string& path);
void render(const Sinogram& sino, const std::string& path);
void render(const Grid& grid, const std::string& path);

}  // namespace arctomo
