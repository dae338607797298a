#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace swe {

// State vectors of equilibrium variables: (w, hu) in 1-D, (w, hu, hv) in 2-D.
// Component 0 is always the water surface w.
using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

template <std::size_t N>
inline std::array<double, N> operator+(const std::array<double, N>& a, const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t c = 0; c < N; ++c) r[c] = a[c] + b[c];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& a, const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t c = 0; c < N; ++c) r[c] = a[c] - b[c];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(double s, const std::array<double, N>& a) {
  std::array<double, N> r;
  for (std::size_t c = 0; c < N; ++c) r[c] = s * a[c];
  return r;
}

template <std::size_t N>
inline std::array<double, N>& operator+=(std::array<double, N>& a, const std::array<double, N>& b) {
  for (std::size_t c = 0; c < N; ++c) a[c] += b[c];
  return a;
}

// out = wa*a + wb*b over whole arrays (ghosts included); used by the RK stages.
template <std::size_t N>
inline void axpby(double wa, const std::vector<std::array<double, N>>& a,
                  double wb, const std::vector<std::array<double, N>>& b,
                  std::vector<std::array<double, N>>& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < N; ++c) out[i][c] = wa * a[i][c] + wb * b[i][c];
}

template <std::size_t N>
inline bool all_finite(const std::array<double, N>& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace swe
