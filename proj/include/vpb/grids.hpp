#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vpb/core.hpp"

namespace vpb {

// Uniform midpoint lattice in velocity space, symmetric about the origin so
// the node set is closed under xi -> -xi and odd moments cancel exactly.
struct VelocityGrid {
  double half_width = 0.0;
  int n_per_axis = 0;
  double h = 0.0;            // spacing per axis
  double cell_volume = 0.0;  // h^3, the quadrature weight
  std::vector<double> axis;  // midpoint coordinates, size n_per_axis

  int size() const { return n_per_axis * n_per_axis * n_per_axis; }

  int index(int i, int j, int k) const {
    return (i * n_per_axis + j) * n_per_axis + k;
  }

  Vec3 node(int idx) const {
    const int n = n_per_axis;
    const int k = idx % n;
    const int j = (idx / n) % n;
    const int i = idx / (n * n);
    return {axis[i], axis[j], axis[k]};
  }

  // Trilinear interpolation with linear fade to zero across the outermost
  // half-cell; points beyond that evaluate to zero.
  double interpolate(const std::vector<double>& f, const Vec3& p) const {
    const int n = n_per_axis;
    double w0[3], w1[3];
    int i0[3];
    for (int d = 0; d < 3; ++d) {
      const double s = (p[d] + half_width) / h - 0.5;
      if (s <= -1.0 || s >= static_cast<double>(n)) return 0.0;
      const double fl = std::floor(s);
      i0[d] = static_cast<int>(fl);
      w1[d] = s - fl;
      w0[d] = 1.0 - w1[d];
    }
    double acc = 0.0;
    for (int a = 0; a < 2; ++a) {
      const int i = i0[0] + a;
      if (i < 0 || i >= n) continue;
      const double wa = a ? w1[0] : w0[0];
      for (int b = 0; b < 2; ++b) {
        const int j = i0[1] + b;
        if (j < 0 || j >= n) continue;
        const double wb = b ? w1[1] : w0[1];
        for (int c = 0; c < 2; ++c) {
          const int k = i0[2] + c;
          if (k < 0 || k >= n) continue;
          const double wc = c ? w1[2] : w0[2];
          acc += wa * wb * wc * f[index(i, j, k)];
        }
      }
    }
    return acc;
  }
};

inline VelocityGrid build_velocity_grid(double half_width, int n) {
  if (n < 4) throw std::invalid_argument("build_velocity_grid: need n >= 4");
  if (!(half_width > 0.0))
    throw std::invalid_argument("build_velocity_grid: half_width must be positive");
  VelocityGrid g;
  g.half_width = half_width;
  g.n_per_axis = n;
  g.h = 2.0 * half_width / n;
  g.cell_volume = g.h * g.h * g.h;
  g.axis.resize(n);
  for (int i = 0; i < n; ++i) g.axis[i] = -half_width + (i + 0.5) * g.h;
  return g;
}

struct SpatialGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 1;
  double dx = 1.0;

  double center(int i) const { return x_min + (i + 0.5) * dx; }
};

inline SpatialGrid build_spatial_grid(double x_min, double x_max, int n_cells) {
  if (!(x_min < x_max)) throw std::invalid_argument("SpatialGrid: x_min < x_max required");
  if (n_cells < 1) throw std::invalid_argument("SpatialGrid: n_cells >= 1 required");
  SpatialGrid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.dx = (x_max - x_min) / n_cells;
  return g;
}

using DistributionSlice = std::vector<double>;

// F(x_i, xi_j): one velocity slice per spatial cell, stored contiguously.
struct DistributionField {
  SpatialGrid sx;
  VelocityGrid gv;
  std::vector<double> data;

  DistributionField() = default;
  DistributionField(const SpatialGrid& s, const VelocityGrid& v)
      : sx(s), gv(v), data(static_cast<size_t>(s.n_cells) * v.size(), 0.0) {}

  double* slice(int cell) { return data.data() + static_cast<size_t>(cell) * gv.size(); }
  const double* slice(int cell) const {
    return data.data() + static_cast<size_t>(cell) * gv.size();
  }

  DistributionSlice slice_copy(int cell) const {
    const double* p = slice(cell);
    return DistributionSlice(p, p + gv.size());
  }

  void set_slice(int cell, const DistributionSlice& s) {
    if (static_cast<int>(s.size()) != gv.size())
      throw std::invalid_argument("DistributionField: slice size mismatch");
    std::copy(s.begin(), s.end(), slice(cell));
  }
};

}  // namespace vpb
