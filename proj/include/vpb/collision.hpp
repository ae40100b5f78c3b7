#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vpb/angular.hpp"
#include "vpb/core.hpp"
#include "vpb/grids.hpp"
#include "vpb/phase_space.hpp"

namespace vpb {

enum class CollisionMode { hard_sphere, bgk_surrogate };

struct CollisionConfig {
  AngularQuadrature angular;
  CollisionMode mode = CollisionMode::hard_sphere;
  double bgk_rate = 1.0;  // only read in bgk_surrogate mode

  void validate() const {
    angular.validate();
    if (mode == CollisionMode::bgk_surrogate && !(bgk_rate > 0.0))
      throw std::invalid_argument("CollisionConfig: bgk_rate > 0 required");
  }
};

inline CollisionConfig hard_sphere_config(int n_theta, int n_phi) {
  CollisionConfig c;
  c.angular = product_gauss_sphere(n_theta, n_phi);
  c.mode = CollisionMode::hard_sphere;
  return c;
}

inline CollisionConfig bgk_config(double rate) {
  CollisionConfig c;
  c.angular = octahedral_14();
  c.mode = CollisionMode::bgk_surrogate;
  c.bgk_rate = rate;
  return c;
}

namespace detail {

// Trilinear stencil of a lattice-offset point: integer base plus 2x2x2 weights
// per axis. Relative offsets are shared by every node pair with the same index
// displacement, which is what makes the O(N^2 Nw) kernel affordable.
struct Stencil {
  int base[3];
  double w0[3], w1[3];
};

inline Stencil make_stencil(const Vec3& offset_index_units) {
  Stencil s;
  for (int d = 0; d < 3; ++d) {
    const double fl = std::floor(offset_index_units[d]);
    s.base[d] = static_cast<int>(fl);
    s.w1[d] = offset_index_units[d] - fl;
    s.w0[d] = 1.0 - s.w1[d];
  }
  return s;
}

// Gather with zero extension outside the lattice.
inline double gather(const double* f, int n, int ai, int aj, int ak, const Stencil& s) {
  const int i0 = ai + s.base[0], j0 = aj + s.base[1], k0 = ak + s.base[2];
  double acc = 0.0;
  for (int a = 0; a < 2; ++a) {
    const int i = i0 + a;
    if (unsigned(i) >= unsigned(n)) continue;
    const double wa = a ? s.w1[0] : s.w0[0];
    for (int b = 0; b < 2; ++b) {
      const int j = j0 + b;
      if (unsigned(j) >= unsigned(n)) continue;
      const double wab = wa * (b ? s.w1[1] : s.w0[1]);
      const double* row = f + (static_cast<size_t>(i) * n + j) * n;
      const int k1 = k0, k2 = k0 + 1;
      double rowacc = 0.0;
      if (unsigned(k1) < unsigned(n)) rowacc += s.w0[2] * row[k1];
      if (unsigned(k2) < unsigned(n)) rowacc += s.w1[2] * row[k2];
      acc += wab * rowacc;
    }
  }
  return acc;
}

}  // namespace detail

// Hard-sphere bilinear collision operator on the lattice:
//   Q(H1,H2)(xi) = sum_{xi*} sum_{w: (xi-xi*).w >= 0}
//       wgt * vol * ((xi-xi*).w) * [H1(xi*') H2(xi') - H1(xi*) H2(xi)]
// with post-collision points evaluated by trilinear interpolation.
inline DistributionSlice q_collide(const DistributionSlice& H1, const DistributionSlice& H2,
                                   const VelocityGrid& g, const CollisionConfig& c) {
  if (c.mode != CollisionMode::hard_sphere)
    throw std::invalid_argument("q_collide: requires hard_sphere mode");
  if (static_cast<int>(H1.size()) != g.size() || static_cast<int>(H2.size()) != g.size())
    throw std::invalid_argument("q_collide: slice/grid size mismatch");
  const int n = g.n_per_axis;
  const double vol = g.cell_volume;
  DistributionSlice Q(g.size(), 0.0);
  const double* h1 = H1.data();
  const double* h2 = H2.data();
  double* out = Q.data();

#pragma omp parallel
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
    const int nth = omp_get_num_threads();
#else
    const int tid = 0, nth = 1;
#endif
    // stripe of output-plane indices owned by this thread; every write below
    // lands in the stripe, so the accumulation order per node is fixed
    const int i_lo = (n * tid) / nth;
    const int i_hi = (n * (tid + 1)) / nth;

    for (int iw = 0; iw < c.angular.size(); ++iw) {
      const Vec3 w = c.angular.directions[iw];
      const double wgt = c.angular.weights[iw];
      for (int di = -(n - 1); di <= n - 1; ++di) {
        const int ai_lo = std::max(i_lo, std::max(0, di));
        const int ai_hi = std::min(i_hi, n + std::min(0, di));
        if (ai_lo >= ai_hi) continue;
        for (int dj = -(n - 1); dj <= n - 1; ++dj) {
          const int aj_lo = std::max(0, dj), aj_hi = n + std::min(0, dj);
          for (int dk = -(n - 1); dk <= n - 1; ++dk) {
            const double dot_iw = di * w[0] + dj * w[1] + dk * w[2];
            const double cdot = g.h * dot_iw;  // (xi - xi*) . w
            if (cdot <= 0.0) continue;
            const Vec3 e{dot_iw * w[0], dot_iw * w[1], dot_iw * w[2]};
            const detail::Stencil s_prime = detail::make_stencil({-e[0], -e[1], -e[2]});
            const detail::Stencil s_star = detail::make_stencil(e);
            const double coef = wgt * cdot * vol;
            const int ak_lo = std::max(0, dk), ak_hi = n + std::min(0, dk);
            for (int ai = ai_lo; ai < ai_hi; ++ai) {
              const int bi = ai - di;
              for (int aj = aj_lo; aj < aj_hi; ++aj) {
                const int bj = aj - dj;
                const double* h1row = h1 + (static_cast<size_t>(bi) * n + bj) * n;
                const double* h2row = h2 + (static_cast<size_t>(ai) * n + aj) * n;
                double* qrow = out + (static_cast<size_t>(ai) * n + aj) * n;
                for (int ak = ak_lo; ak < ak_hi; ++ak) {
                  const int bk = ak - dk;
                  const double gain = detail::gather(h1, n, bi, bj, bk, s_star) *
                                      detail::gather(h2, n, ai, aj, ak, s_prime);
                  qrow[ak] += coef * (gain - h1row[bk] * h2row[ak]);
                }
              }
            }
          }
        }
      }
    }
  }
  return Q;
}

// Loss-side collision frequency nu(xi) = sum_{xi*,w} wgt * vol * ((xi-xi*).w)_+ H(xi*).
// The angular sum depends only on the index displacement, so this is a
// convolution with a precomputed kernel.
inline DistributionSlice collision_frequency(const DistributionSlice& H, const VelocityGrid& g,
                                             const CollisionConfig& c) {
  if (c.mode != CollisionMode::hard_sphere)
    throw std::invalid_argument("collision_frequency: requires hard_sphere mode");
  const int n = g.n_per_axis;
  const int m = 2 * n - 1;
  std::vector<double> kern(static_cast<size_t>(m) * m * m, 0.0);
  for (int di = -(n - 1); di <= n - 1; ++di)
    for (int dj = -(n - 1); dj <= n - 1; ++dj)
      for (int dk = -(n - 1); dk <= n - 1; ++dk) {
        double acc = 0.0;
        for (int iw = 0; iw < c.angular.size(); ++iw) {
          const Vec3 w = c.angular.directions[iw];
          const double cdot = g.h * (di * w[0] + dj * w[1] + dk * w[2]);
          if (cdot > 0.0) acc += c.angular.weights[iw] * cdot;
        }
        kern[(static_cast<size_t>(di + n - 1) * m + (dj + n - 1)) * m + (dk + n - 1)] =
            acc * g.cell_volume;
      }
  DistributionSlice nu(g.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (int ai = 0; ai < n; ++ai)
    for (int aj = 0; aj < n; ++aj)
      for (int ak = 0; ak < n; ++ak) {
        double acc = 0.0;
        for (int bi = 0; bi < n; ++bi)
          for (int bj = 0; bj < n; ++bj) {
            const double* hrow = H.data() + (static_cast<size_t>(bi) * n + bj) * n;
            const double* krow = kern.data() +
                                 (static_cast<size_t>(ai - bi + n - 1) * m + (aj - bj + n - 1)) * m +
                                 (ak + n - 1);
            for (int bk = 0; bk < n; ++bk) acc += hrow[bk] * krow[-bk];
          }
        nu[g.index(ai, aj, ak)] = acc;
      }
  return nu;
}

inline DistributionSlice q_loss(const DistributionSlice& H1, const DistributionSlice& H2,
                                const VelocityGrid& g, const CollisionConfig& c) {
  DistributionSlice nu = collision_frequency(H1, g, c);
  for (size_t i = 0; i < nu.size(); ++i) nu[i] *= H2[i];
  return nu;
}

// Linearized operator around the local Maxwellian of p:
//   L_M h = Q(h, M) + Q(M, h).
inline DistributionSlice linearized_l(const DistributionSlice& h, const FluidTriple& p,
                                      const VelocityGrid& g, const CollisionConfig& c) {
  const DistributionSlice m = maxwellian(p, g);
  DistributionSlice a = q_collide(h, m, g, c);
  const DistributionSlice b = q_collide(m, h, g, c);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// BGK relaxation rate*(M - F) with the Maxwellian corrected inside the
// five-dimensional macroscopic span so the discrete moments of the output
// vanish identically, not just up to quadrature error.
inline DistributionSlice bgk_relax(const DistributionSlice& F, const VelocityGrid& g,
                                   const CollisionConfig& c) {
  if (c.mode != CollisionMode::bgk_surrogate)
    throw std::invalid_argument("bgk_relax: requires bgk_surrogate mode");
  const MacroMicro mm = macro_micro_split(F, g);
  const ChiBasis basis = build_chi_basis(mm.fluid, g);
  DistributionSlice out = project_p1(mm.micro, basis, g);
  for (auto& v : out) v *= -c.bgk_rate;
  return out;
}

}  // namespace vpb
