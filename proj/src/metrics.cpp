#include "arctomo/metrics.hpp"

#include <stdexcept>

namespace arctomo {

double nmse(const ImageGrid& f, const ImageGrid& f0) {
    if (f.nx != f0.nx || f.nz != f0.nz)
        throw std::invalid_argument("nmse: image dimensions differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double d = f.values[i] - f0.values[i];
        acc += d * d;
    }
    return acc / (static_cast<double>(f.nx) * f.nz);
}

}  // namespace arctomo
