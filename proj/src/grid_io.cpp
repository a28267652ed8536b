#include "arctomo/grid_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace arctomo {

namespace {

constexpr char kMagic[4] = {'A', 'R', 'C', 'G'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 1 + 4 + 4 + 4 * 8;

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

struct Reader {
    const std::string& data;
    std::size_t pos = 0;

    void need(std::size_t n, const char* what) const {
        if (pos + n > data.size())
            throw FormatError(std::string("grid file truncated while reading ") + what, pos);
    }
    std::uint8_t u8(const char* what) {
        need(1, what);
        return static_cast<std::uint8_t>(data[pos++]);
    }
    std::uint32_t u32(const char* what) {
        need(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    double f64(const char* what) {
        need(8, what);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data[pos + i])) << (8 * i);
        pos += 8;
        return std::bit_cast<double>(v);
    }
};

void write_file(const std::string& path, std::uint8_t kind, std::uint32_t rows,
                std::uint32_t cols, double a0s, double a0d, double a1s, double a1d,
                const std::vector<double>& values) {
    std::string buf;
    buf.reserve(kHeaderSize + values.size() * 8);
    buf.append(kMagic, 4);
    put_u32(buf, kVersion);
    buf.push_back(static_cast<char>(kind));
    put_u32(buf, rows);
    put_u32(buf, cols);
    put_f64(buf, a0s);
    put_f64(buf, a0d);
    put_f64(buf, a1s);
    put_f64(buf, a1d);
    for (double v : values) put_f64(buf, v);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

void write_pgm(const std::vector<double>& values, int rows, int cols,
               const std::string& path) {
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("render: non-finite value");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double span = hi - lo;

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "P5\n" << cols << " " << rows << "\n255\n";
    std::string pix(values.size(), '\0');
    if (span > 0.0) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double t = (values[i] - lo) / span * 255.0;
            pix[i] = static_cast<char>(static_cast<unsigned char>(std::lround(t)));
        }
    }
    out.write(pix.data(), static_cast<std::streamsize>(pix.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_grid(const ImageGrid& img, const std::string& path) {
    const double a0s = img.z_coord(0);
    const double a0d = img.frame == Frame::PhysicalF ? -1.0 : 1.0;
    write_file(path, 0, static_cast<std::uint32_t>(img.nz), static_cast<std::uint32_t>(img.nx),
               a0s, a0d, img.x_coord(0), 1.0, img.values);
}

void write_grid(const Sinogram& sino, const std::string& path) {
    write_file(path, 1, static_cast<std::uint32_t>(sino.n_sd()),
               static_cast<std::uint32_t>(sino.n_r()), sino.x0_axis.front(),
               sino.geom.delta_x0, sino.r_axis.front(), sino.geom.delta_r, sino.values);
}

void write_grid(const Grid& grid, const std::string& path) {
    std::visit([&](const auto& g) { write_grid(g, path); }, grid);
}

Grid read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Reader r{data};

    r.need(4, "magic");
    if (std::memcmp(data.data(), kMagic, 4) != 0)
        throw FormatError("bad magic, expected \"ARCG\"", 0);
    r.pos = 4;
    const std::uint32_t version = r.u32("version");
    if (version != kVersion)
        throw FormatError("unsupported version " + std::to_string(version), 4);
    const std::uint8_t kind = r.u8("kind");
    if (kind > 1)
        throw FormatError("unknown grid kind " + std::to_string(kind), 8);
    const std::uint32_t rows = r.u32("rows");
    const std::uint32_t cols = r.u32("cols");
    if (rows == 0 || cols == 0 || rows > (1u << 24) || cols > (1u << 24))
        throw FormatError("implausible dimensions", 9);
    const double a0s = r.f64("axis0_start");
    const double a0d = r.f64("axis0_step");
    const double a1s = r.f64("axis1_start");
    const double a1d = r.f64("axis1_step");

    const std::size_t count = static_cast<std::size_t>(rows) * cols;
    if (data.size() != kHeaderSize + count * 8)
        throw FormatError("payload length mismatch: expected " +
                              std::to_string(kHeaderSize + count * 8) + " bytes, file has " +
                              std::to_string(data.size()),
                          std::min(data.size(), kHeaderSize + count * 8));
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = r.f64("values");

    if (kind == 0) {
        if (a1d != 1.0 || (a0d != 1.0 && a0d != -1.0))
            throw FormatError("image axes must have unit steps", 25);
        ImageGrid img;
        img.nx = static_cast<int>(cols);
        img.nz = static_cast<int>(rows);
        img.frame = a0d < 0.0 ? Frame::PhysicalF : Frame::FlippedF1;
        img.delta = img.frame == Frame::PhysicalF ? 1.0 - a0s : a0s - 1.0;
        img.values = std::move(values);
        if (std::abs(img.x_coord(0) - a1s) > 1e-9)
            throw FormatError("image x axis is not centred", 33);
        return img;
    }

    if (!(a0d > 0.0) || !(a1d > 0.0))
        throw FormatError("sinogram axis steps must be positive", 25);
    if (!(a1s > 1.0))
        throw FormatError("sinogram radii must start above 1", 33);
    Sinogram sino;
    sino.x0_axis.resize(rows);
    for (std::uint32_t k = 0; k < rows; ++k) sino.x0_axis[k] = a0s + k * a0d;
    sino.r_axis.resize(cols);
    for (std::uint32_t l = 0; l < cols; ++l) sino.r_axis[l] = a1s + l * a1d;
    sino.geom.x0_max = std::max(std::abs(sino.x0_axis.front()), std::abs(sino.x0_axis.back()));
    sino.geom.delta_x0 = a0d;
    sino.geom.delta_r = a1d;
    sino.geom.r_max = sino.r_axis.back();
    sino.values = std::move(values);
    return sino;
}

void render(const ImageGrid& img, const std::string& path) {
    write_pgm(img.values, img.nz, img.nx, path);
}

void render(const Sinogram& sino, const std::string& path) {
    write_pgm(sino.values, sino.n_sd(), sino.n_r(), path);
}

void render(const Grid& grid, const std::string& path) {
    std::visit([&](const auto& g) { render(g, path); }, grid);
}

}  // namespace arctomo
