#pragma once

// The nine rays of the chamber complex and their minimal lattice generators.
// STAR is the unique interior ray; the other eight generate the label cone.
// The generators satisfy C1+C2+C3 = D1+D3+D5 = LT+RT = STAR.

#include "core/types.hpp"

namespace su3 {

enum Ray : int {
  kC1 = 0,
  kC2 = 1,
  kC3 = 2,
  kD1 = 3,
  kD3 = 4,
  kD5 = 5,
  kLT = 6,  // left-pointing triangle
  kRT = 7,  // right-pointing triangle
  kStar = 8,
};

inline constexpr int kNumRays = 9;

inline constexpr std::array<Vec6, kNumRays> kRayVectors = {{
    {0, 0, 0, 1, 1, 0},  // C1
    {1, 0, 0, 0, 0, 1},  // C2
    {0, 1, 1, 0, 0, 0},  // C3
    {1, 0, 0, 1, 0, 0},  // D1
    {0, 0, 1, 0, 0, 1},  // D3
    {0, 1, 0, 0, 1, 0},  // D5
    {1, 0, 1, 0, 1, 0},  // LT
    {0, 1, 0, 1, 0, 1},  // RT
    {1, 1, 1, 1, 1, 1},  // STAR
}};

inline constexpr std::array<const char*, kNumRays> kRayNames = {
    "C1", "C2", "C3", "D1", "D3", "D5", "LT", "RT", "STAR"};

inline TripleLabel ray_generator(Ray r) { return TripleLabel{kRayVectors[r]}; }

// Name lookup; returns -1 for unknown names. Accepts the JSON tokens
// (LT, RT, STAR) only.
int ray_from_name(std::string_view name);

}  // namespace su3
