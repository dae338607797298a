#pragma once

#include <array>

namespace swe::quad {

// Gauss-Legendre rules on [-1, 1]; weights sum to 2.
inline constexpr std::array<double, 2> g2_x = {-0.57735026918962576, 0.57735026918962576};
inline constexpr std::array<double, 2> g2_w = {1.0, 1.0};

inline constexpr std::array<double, 3> g3_x = {-0.77459666924148338, 0.0, 0.77459666924148338};
inline constexpr std::array<double, 3> g3_w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

inline constexpr std::array<double, 5> g5_x = {-0.90617984593866399, -0.53846931010568309, 0.0,
                                               0.53846931010568309, 0.90617984593866399};
inline constexpr std::array<double, 5> g5_w = {0.23692688505618909, 0.47862867049936647, 128.0 / 225.0,
                                               0.47862867049936647, 0.23692688505618909};

template <class F>
double integrate3(double a, double b, F&& f) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int g = 0; g < 3; ++g) s += g3_w[g] * f(mid + half * g3_x[g]);
  return half * s;
}

template <class F>
double integrate5(double a, double b, F&& f) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int g = 0; g < 5; ++g) s += g5_w[g] * f(mid + half * g5_x[g]);
  return half * s;
}

}  // namespace swe::quad
