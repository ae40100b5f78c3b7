#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "vpb/core.hpp"

namespace vpb {

// Smooth rarefaction data for the inviscid Burgers equation:
//   w(0,x) = (w_+ + w_-)/2 + (w_+ - w_-)/2 * tanh(eps x).
// The solution stays smooth for all t >= 0 because w0' > 0, and is evaluated
// exactly through the characteristic relation x = x0 + w0(x0) t.
struct BurgersWave {
  double w_minus;
  double w_plus;
  double epsilon;

  BurgersWave(double wm, double wp, double eps) : w_minus(wm), w_plus(wp), epsilon(eps) {
    if (!(wm < wp)) throw std::invalid_argument("BurgersWave: w_minus < w_plus required");
    if (!(eps > 0.0)) throw std::invalid_argument("BurgersWave: epsilon > 0 required");
  }

  double strength() const { return w_plus - w_minus; }

  double w0(double x) const {
    return 0.5 * (w_plus + w_minus) + 0.5 * (w_plus - w_minus) * std::tanh(epsilon * x);
  }
  double w0p(double x) const {
    const double s = 1.0 / std::cosh(epsilon * x);
    return 0.5 * (w_plus - w_minus) * epsilon * s * s;
  }
  double w0pp(double x) const {
    const double s = 1.0 / std::cosh(epsilon * x);
    return -(w_plus - w_minus) * epsilon * epsilon * s * s * std::tanh(epsilon * x);
  }
};

// Characteristic foot x0 solving x = x0 + w0(x0) t, unique since w0' > 0.
inline double burgers_foot(const BurgersWave& b, double t, double x) {
  if (!(t >= 0.0)) throw std::invalid_argument("burgers_smooth: t >= 0 required");
  if (t == 0.0) return x;
  double lo = x - b.w_plus * t, hi = x - b.w_minus * t;
  double x0 = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = x0 + b.w0(x0) * t - x;
    if (std::abs(f) < 1e-12 * std::max(1.0, std::abs(x) + b.w_plus * t)) return x0;
    if (f > 0.0)
      hi = x0;
    else
      lo = x0;
    const double fp = 1.0 + b.w0p(x0) * t;
    double next = x0 - f / fp;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(x0))) return 0.5 * (lo + hi);
    x0 = next;
  }
  throw std::runtime_error("burgers_smooth: characteristic root search failed");
}

inline double burgers_smooth(const BurgersWave& b, double t, double x) {
  return b.w0(burgers_foot(b, t, x));
}

// Spatial derivatives along characteristics:
//   dw/dx = w0'/(1 + w0' t),  d2w/dx2 = w0''/(1 + w0' t)^3.
inline double burgers_smooth_dx(const BurgersWave& b, double t, double x) {
  const double x0 = burgers_foot(b, t, x);
  const double wp = b.w0p(x0);
  return wp / (1.0 + wp * t);
}

inline double burgers_smooth_dxx(const BurgersWave& b, double t, double x) {
  const double x0 = burgers_foot(b, t, x);
  const double d = 1.0 + b.w0p(x0) * t;
  return b.w0pp(x0) / (d * d * d);
}

// Centered fan of the Riemann problem, a function of xi = x/t.
inline double burgers_centered(double w_minus, double w_plus, double xi) {
  return std::clamp(xi, w_minus, w_plus);
}

struct DecayFit {
  double slope = 0.0;          // fitted d log||.|| / d log t over the window
  double envelope = 0.0;       // max over the window of ||.|| * t^{-slope_theory}... see below
  std::vector<double> times;
  std::vector<double> norms;
  bool resolution_ok = true;   // false when grid refinement moves a norm by > 1%
};

// ||d^j w/dx^j||_{L^p} at one time, by composite midpoint quadrature over the
// transition region. The integrand is constant (zero) outside the fan plus an
// O(1/eps) collar, so the domain is cut there and no box-size tail is left.
inline double burgers_deriv_norm(const BurgersWave& b, double t, double p, int j,
                                 int n_points) {
  const double collar = 40.0 / b.epsilon;
  const double lo = b.w_minus * t - collar, hi = b.w_plus * t + collar;
  const double dx = (hi - lo) / n_points;
  const auto dval = [&](double x) {
    return (j == 1) ? burgers_smooth_dx(b, t, x) : burgers_smooth_dxx(b, t, x);
  };
  if (std::isinf(p)) {
    double mx = 0.0;
    for (int i = 0; i < n_points; ++i)
      mx = std::max(mx, std::abs(dval(lo + (i + 0.5) * dx)));
    return mx;
  }
  if (p == 1.0 && j == 1) {
    // monotone profile: the integral telescopes to w(hi) - w(lo) exactly
    double acc = 0.0, prev = burgers_smooth(b, t, lo);
    for (int i = 1; i <= n_points; ++i) {
      const double cur = burgers_smooth(b, t, lo + i * dx);
      acc += std::abs(cur - prev);
      prev = cur;
    }
    return acc;
  }
  double acc = 0.0;
  for (int i = 0; i < n_points; ++i)
    acc += std::pow(std::abs(dval(lo + (i + 0.5) * dx)), p);
  return std::pow(acc * dx, 1.0 / p);
}

// Fits the late-time log-log slope of ||d^j w/dx^j||_{L^p}(t). Norms are
// computed at two grid resolutions; a >1% disagreement raises the
// insufficient-resolution flag instead of silently fitting noise.
inline DecayFit measure_decay(const BurgersWave& b, double p, const std::vector<double>& times,
                              int derivative_order = 1) {
  if (times.size() < 2 || !(times.back() >= 10.0 * times.front()))
    throw std::invalid_argument("measure_decay: times must span at least one decade");
  if (derivative_order != 1 && derivative_order != 2)
    throw std::invalid_argument("measure_decay: derivative_order must be 1 or 2");
  DecayFit fit;
  fit.times = times;
  for (double t : times) {
    const int n = 20000;
    const double v1 = burgers_deriv_norm(b, t, p, derivative_order, n);
    const double v2 = burgers_deriv_norm(b, t, p, derivative_order, 2 * n);
    if (std::abs(v1 - v2) > 0.01 * std::abs(v2)) fit.resolution_ok = false;
    fit.norms.push_back(v2);
  }
  // least-squares line through (log t, log norm) over the last half-decade+
  const double t_cut = times.back() / std::sqrt(10.0) / std::sqrt(10.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_cut) continue;
    const double lx = std::log(times[i]), ly = std::log(fit.norms[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++cnt;
  }
  if (cnt < 2) throw std::invalid_argument("measure_decay: need >= 2 late-time samples");
  fit.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  // envelope constant C with ||.|| ~ C t^slope at the last sample
  fit.envelope = fit.norms.back() / std::pow(times.back(), fit.slope);
  return fit;
}

}  // namespace vpb
