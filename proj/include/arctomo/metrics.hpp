#pragma once

#include "arctomo/geometry.hpp"

namespace arctomo {

// Normalized mean squared error sum((f - f0)^2) / (rows * cols).
double nmse(const ImageGrid& f, const ImageGrid& f0);

}  // namespace arctomo
