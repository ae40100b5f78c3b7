#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "vpb/core.hpp"
#include "vpb/grids.hpp"

namespace vpb {

// Local Maxwellian M_[rho,u,theta](xi) = rho/(2 pi R theta)^(3/2) exp(-|xi-u|^2/(2 R theta)).
inline DistributionSlice maxwellian(const FluidTriple& p, const VelocityGrid& g) {
  p.validate();
  const double rt = kGasConstant * p.theta;
  const double pref = p.rho / std::pow(2.0 * M_PI * rt, 1.5);
  const double inv2rt = 1.0 / (2.0 * rt);
  DistributionSlice m(g.size());
  const int n = g.n_per_axis;
  // separable exponential: exp(-(x-u)^2/2rt) per axis
  std::array<std::vector<double>, 3> ax;
  for (int d = 0; d < 3; ++d) {
    ax[d].resize(n);
    for (int i = 0; i < n; ++i) ax[d][i] = std::exp(-sq(g.axis[i] - p.u[d]) * inv2rt);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double pij = pref * ax[0][i] * ax[1][j];
      double* row = m.data() + static_cast<size_t>(g.index(i, j, 0));
      for (int k = 0; k < n; ++k) row[k] = pij * ax[2][k];
    }
  return m;
}

inline FluidMoments moments(const DistributionSlice& f, const VelocityGrid& g) {
  FluidMoments mom;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0, e = 0.0;
  const int n = g.n_per_axis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double xi1 = g.axis[i], xi2 = g.axis[j];
      const double base12 = xi1 * xi1 + xi2 * xi2;
      const double* row = f.data() + static_cast<size_t>(g.index(i, j, 0));
      for (int k = 0; k < n; ++k) {
        const double v = row[k];
        const double xi3 = g.axis[k];
        m0 += v;
        m1 += v * xi1;
        m2 += v * xi2;
        m3 += v * xi3;
        e += 0.5 * v * (base12 + xi3 * xi3);
      }
    }
  mom.mass = m0 * g.cell_volume;
  mom.momentum = {m1 * g.cell_volume, m2 * g.cell_volume, m3 * g.cell_volume};
  mom.energy = e * g.cell_volume;
  return mom;
}

inline FluidTriple fluid_from_moments(const FluidMoments& m) {
  if (!(m.mass > 0.0))
    throw std::invalid_argument("fluid_from_moments: nonpositive mass");
  FluidTriple p;
  p.rho = m.mass;
  p.u = (1.0 / m.mass) * m.momentum;
  p.theta = m.energy / m.mass - 0.5 * norm2(p.u);
  if (!(p.theta > 0.0))
    throw std::invalid_argument("fluid_from_moments: nonpositive temperature (unphysical state)");
  return p;
}

// <f,g>_M = int f g / M dxi. The reference must be strictly positive.
inline double inner_product(const DistributionSlice& f, const DistributionSlice& g,
                            const DistributionSlice& mref, const VelocityGrid& grid) {
  double acc = 0.0;
  const size_t n = f.size();
  for (size_t i = 0; i < n; ++i) {
    if (!(mref[i] > 0.0))
      throw std::invalid_argument("inner_product: reference Maxwellian has a nonpositive node");
    acc += f[i] * g[i] / mref[i];
  }
  return acc * grid.cell_volume;
}

// The five orthonormal macroscopic basis functions
//   chi0 = M/sqrt(rho), chi_i = (xi_i-u_i) M / sqrt(R rho theta),
//   chi4 = (|xi-u|^2/(R theta) - 3) M / sqrt(6 rho),
// plus a discretely re-orthonormalized copy. On the lattice the analytic set
// is orthonormal only up to quadrature error; the corrected set makes the
// projections exactly idempotent, which downstream solvers rely on.
struct ChiBasis {
  FluidTriple params;
  DistributionSlice m;                        // the weight Maxwellian
  std::array<DistributionSlice, 5> raw;       // analytic formulas on the lattice
  std::array<DistributionSlice, 5> ortho;     // Gram-Schmidt corrected
};

inline std::array<DistributionSlice, 5> chi_basis(const FluidTriple& p,
                                                  const VelocityGrid& g) {
  p.validate();
  const DistributionSlice m = maxwellian(p, g);
  const double rt = kGasConstant * p.theta;
  const double c0 = 1.0 / std::sqrt(p.rho);
  const double ci = 1.0 / std::sqrt(kGasConstant * p.rho * p.theta);
  const double c4 = 1.0 / std::sqrt(6.0 * p.rho);
  std::array<DistributionSlice, 5> chi;
  for (auto& c : chi) c.resize(g.size());
  const int nn = g.size();
  for (int idx = 0; idx < nn; ++idx) {
    const Vec3 xi = g.node(idx);
    const Vec3 c_ = xi - p.u;
    const double mm = m[idx];
    chi[0][idx] = c0 * mm;
    chi[1][idx] = ci * c_[0] * mm;
    chi[2][idx] = ci * c_[1] * mm;
    chi[3][idx] = ci * c_[2] * mm;
    chi[4][idx] = c4 * (norm2(c_) / rt - 3.0) * mm;
  }
  return chi;
}

inline ChiBasis build_chi_basis(const FluidTriple& p, const VelocityGrid& g) {
  ChiBasis b;
  b.params = p;
  b.m = maxwellian(p, g);
  b.raw = chi_basis(p, g);
  b.ortho = b.raw;
  // modified Gram-Schmidt in the discrete <.,.>_M inner product
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < j; ++i) {
      const double c = inner_product(b.ortho[j], b.ortho[i], b.m, g);
      for (size_t k = 0; k < b.ortho[j].size(); ++k) b.ortho[j][k] -= c * b.ortho[i][k];
    }
    const double nrm = std::sqrt(inner_product(b.ortho[j], b.ortho[j], b.m, g));
    if (!(nrm > 0.0)) throw std::runtime_error("build_chi_basis: degenerate basis");
    for (auto& v : b.ortho[j]) v /= nrm;
  }
  return b;
}

inline DistributionSlice project_p0(const DistributionSlice& h, const ChiBasis& b,
                                    const VelocityGrid& g) {
  DistributionSlice out(h.size(), 0.0);
  for (int j = 0; j < 5; ++j) {
    const double c = inner_product(h, b.ortho[j], b.m, g);
    for (size_t k = 0; k < out.size(); ++k) out[k] += c * b.ortho[j][k];
  }
  return out;
}

inline DistributionSlice project_p1(const DistributionSlice& h, const ChiBasis& b,
                                    const VelocityGrid& g) {
  DistributionSlice out = project_p0(h, b, g);
  for (size_t k = 0; k < out.size(); ++k) out[k] = h[k] - out[k];
  return out;
}

inline DistributionSlice project_p0(const DistributionSlice& h, const FluidTriple& p,
                                    const VelocityGrid& g) {
  return project_p0(h, build_chi_basis(p, g), g);
}

inline DistributionSlice project_p1(const DistributionSlice& h, const FluidTriple& p,
                                    const VelocityGrid& g) {
  return project_p1(h, build_chi_basis(p, g), g);
}

struct MacroMicro {
  FluidTriple fluid;
  DistributionSlice micro;  // G = F - M_[fluid]
};

inline MacroMicro macro_micro_split(const DistributionSlice& F, const VelocityGrid& g) {
  MacroMicro mm;
  mm.fluid = fluid_from_moments(moments(F, g));
  const DistributionSlice m = maxwellian(mm.fluid, g);
  mm.micro.resize(F.size());
  for (size_t i = 0; i < F.size(); ++i) mm.micro[i] = F[i] - m[i];
  return mm;
}

inline double slice_l2(const DistributionSlice& f, const VelocityGrid& g) {
  double acc = 0.0;
  for (double v : f) acc += v * v;
  return std::sqrt(acc * g.cell_volume);
}

// L^2_xi(1/sqrt(Mstar)) norm squared: int f^2 / Mstar dxi.
inline double weighted_l2_sq(const DistributionSlice& f, const DistributionSlice& mstar,
                             const VelocityGrid& g) {
  double acc = 0.0;
  for (size_t i = 0; i < f.size(); ++i) acc += f[i] * f[i] / mstar[i];
  return acc * g.cell_volume;
}

}  // namespace vpb
