#pragma once
// Fixed generator universe for the whole engine.
//
// Every scalar is a rational function in the four coordinates (w, z, x, y)
// and a fixed set of formal parameters.  Parameters behave as constants under
// differentiation; the spectral parameter `lambda`, the linearization
// parameter `eps`, and the series variable `t` are ordinary generators that
// specific algorithms single out (coefficient extraction, truncation).

#include <array>
#include <cstdint>
#include <string_view>

namespace hh {

inline constexpr int kGenCount = 9;
inline constexpr int kCoordCount = 4;

// Order fixes the canonical monomial order: w < z < x < y < parameters.
inline constexpr std::array<std::string_view, kGenCount> kGenNames = {
    "w", "z", "x", "y", "a", "b", "lambda", "eps", "t"};

enum Gen : int {
  GW = 0,
  GZ = 1,
  GX = 2,
  GY = 3,
  GA = 4,
  GB = 5,
  GLambda = 6,
  GEps = 7,
  GT = 8,
};

// Exponent vector of one monomial; lexicographic std::array order is the
// canonical monomial order.
using Expo = std::array<std::int16_t, kGenCount>;

inline constexpr Expo kZeroExpo{};

constexpr bool isCoordinate(int gen) { return gen >= 0 && gen < kCoordCount; }

// Returns the generator index for a name, or -1.
constexpr int genIndex(std::string_view name) {
  for (int g = 0; g < kGenCount; ++g) {
    if (kGenNames[static_cast<std::size_t>(g)] == name) return g;
  }
  return -1;
}

}  // namespace hh
