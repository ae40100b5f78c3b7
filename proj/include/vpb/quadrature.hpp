#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vpb {

namespace detail {
// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
inline constexpr double kKronrodX[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGaussW[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};
}  // namespace detail

// One Gauss-Kronrod 7-15 panel; returns the Kronrod value and an error estimate.
template <class F>
inline void gk15_panel(const F& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fi = f(c + hw * detail::kKronrodX[i]);
    k += detail::kKronrodW[i] * fi;
    if (i % 2 == 1) g += detail::kGaussW[i / 2] * fi;
  }
  value = k * hw;
  err = std::abs((k - g) * hw);
}

// Adaptive quadrature with absolute tolerance; recursion by interval bisection.
template <class F>
inline double integrate_adaptive(const F& f, double a, double b, double abs_tol,
                                 int max_depth = 40) {
  if (a == b) return 0.0;
  struct Seg {
    double a, b, val, err;
    int depth;
  };
  double v0, e0;
  gk15_panel(f, a, b, v0, e0);
  std::vector<Seg> stack{{a, b, v0, e0, 0}};
  double total = 0.0, total_err = 0.0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.err <= abs_tol * std::max(1e-12, (s.b - s.a) / std::abs(b - a)) ||
        s.depth >= max_depth) {
      total += s.val;
      total_err += s.err;
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    Seg l{s.a, m, 0, 0, s.depth + 1}, r{m, s.b, 0, 0, s.depth + 1};
    gk15_panel(f, l.a, l.b, l.val, l.err);
    gk15_panel(f, r.a, r.b, r.val, r.err);
    stack.push_back(l);
    stack.push_back(r);
  }
  (void)total_err;
  return total;
}

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace vpb
