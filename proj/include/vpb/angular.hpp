#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vpb/core.hpp"
#include "vpb/quadrature.hpp"

namespace vpb {

// Quadrature on the unit sphere; weights sum to 4*pi. The collision kernel
// applies the half-sphere indicator node-wise, so antipodally symmetric sets
// reproduce the S^2_+ restriction without cutting any node weight.
struct AngularQuadrature {
  std::vector<Vec3> directions;
  std::vector<double> weights;

  int size() const { return static_cast<int>(directions.size()); }

  void validate() const {
    double sum = 0.0;
    for (size_t i = 0; i < directions.size(); ++i) {
      if (std::abs(norm2(directions[i]) - 1.0) > 1e-12)
        throw std::invalid_argument("AngularQuadrature: non-unit direction");
      sum += weights[i];
    }
    if (std::abs(sum - 4.0 * M_PI) > 1e-12 * 4.0 * M_PI)
      throw std::invalid_argument("AngularQuadrature: weights must sum to 4*pi");
  }
};

// Gauss-Legendre in cos(theta) x uniform-in-phi product rule. n_phi even keeps
// the node set antipodally symmetric.
inline AngularQuadrature product_gauss_sphere(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("product_gauss_sphere: positive node counts required");
  std::vector<double> mu, wmu;
  gauss_legendre(n_theta, mu, wmu);
  AngularQuadrature q;
  q.directions.reserve(static_cast<size_t>(n_theta) * n_phi);
  q.weights.reserve(static_cast<size_t>(n_theta) * n_phi);
  const double wphi = 2.0 * M_PI / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double s = std::sqrt(std::max(0.0, 1.0 - mu[i] * mu[i]));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = (j + 0.5) * wphi;
      q.directions.push_back({s * std::cos(phi), s * std::sin(phi), mu[i]});
      q.weights.push_back(wmu[i] * wphi);
    }
  }
  q.validate();
  return q;
}

// 14-node octahedral rule (6 vertices + 8 cube corners), exact to degree 5.
inline AngularQuadrature octahedral_14() {
  AngularQuadrature q;
  const double wa = 4.0 * M_PI / 15.0;
  const double wb = 4.0 * M_PI * 3.0 / 40.0;
  const double c = 1.0 / std::sqrt(3.0);
  for (int d = 0; d < 3; ++d)
    for (int s = -1; s <= 1; s += 2) {
      Vec3 v{0, 0, 0};
      v[d] = s;
      q.directions.push_back(v);
      q.weights.push_back(wa);
    }
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sy = -1; sy <= 1; sy += 2)
      for (int sz = -1; sz <= 1; sz += 2) {
        q.directions.push_back({sx * c, sy * c, sz * c});
        q.weights.push_back(wb);
      }
  q.validate();
  return q;
}

}  // namespace vpb
