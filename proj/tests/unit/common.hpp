#pragma once

#include <cmath>
#include <numbers>

#include "sben/fields.hpp"

namespace sben::test {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Grid2P box(int n) { return Grid2P(n, n, kTwoPi, kTwoPi); }

// Central-difference symbol of d/dx acting on sin/cos of unit wavenumber.
inline double symbol(double h) { return std::sin(h) / h; }

}  // namespace sben::test
