#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "vpb/core.hpp"
#include "vpb/electron_model.hpp"
#include "vpb/quadrature.hpp"

namespace vpb {

// State of the quasineutral Euler system in (rho, u1, S) variables. The
// temperature is always derived from S so the two parametrizations cannot
// drift apart.
struct EulerState {
  double rho = 1.0;
  double u1 = 0.0;
  double S = 0.0;

  double theta() const { return theta_of_entropy(rho, S); }
  double pressure() const { return pressure_of_entropy(rho, S); }

  static EulerState from_primitive(double rho, double u1, double theta) {
    if (!(rho > 0.0) || !(theta > 0.0))
      throw std::invalid_argument("EulerState: rho, theta must be positive");
    return {rho, u1, entropy_of(rho, theta)};
  }
};

// dP/drho at constant entropy: (5/3) k e^S rho^(2/3) = (10/9) theta.
inline double dP_drho(double rho, double S) {
  return (5.0 / 3.0) * kEntropyConst * std::exp(S) * std::cbrt(rho * rho);
}

// Sound-like speed squared of the quasineutral system.
inline double wave_speed_sq(double rho, double S, const ElectronDensityModel& m) {
  const double radicand = dP_drho(rho, S) + pphi_pressure(m, rho, rho).d1;
  if (!(radicand > 0.0))
    throw std::runtime_error("eigenvalues: nonpositive characteristic radicand");
  return radicand;
}

struct Eigenvalues {
  double lambda1, lambda2, lambda3;
};

inline Eigenvalues eigenvalues(const EulerState& s, const ElectronDensityModel& m) {
  const double c = std::sqrt(wave_speed_sq(s.rho, s.S, m));
  return {s.u1 - c, s.u1, s.u1 + c};
}

struct WavePoint {
  double u1;
  double theta;
};

// Third wave curve through the left state: constant entropy S_i, velocity by
// the Riemann-invariant integral
//   u1(rho) = u1_- + int_{rho_-}^{rho} sqrt(dP + dPphi)(s) / s ds.
class WaveCurveR3 {
 public:
  WaveCurveR3(const EulerState& left, const ElectronDensityModel& model,
              double quad_tol = 1e-10)
      : left_(left), model_(&model), quad_tol_(quad_tol) {}

  const EulerState& left() const { return left_; }
  double S_i() const { return left_.S; }
  double A_i() const { return kEntropyConst * std::exp(left_.S); }

  WavePoint at(double rho) const {
    if (!(rho >= left_.rho))
      throw std::invalid_argument("wave_curve_r3: 3-wave requires rho >= rho_-");
    const double S = left_.S;
    const auto f = [this, S](double s) {
      return std::sqrt(dP_drho(s, S) + pphi_pressure(*model_, s, s).d1) / s;
    };
    WavePoint p;
    p.u1 = left_.u1 + integrate_adaptive(f, left_.rho, rho, quad_tol_);
    p.theta = 1.5 * A_i() * std::cbrt(rho * rho);
    return p;
  }

  EulerState state_at(double rho) const {
    const WavePoint p = at(rho);
    return {rho, p.u1, left_.S};
  }

  double lambda3_at(double rho) const {
    const EulerState s = state_at(rho);
    return eigenvalues(s, *model_).lambda3;
  }

  // Inverts lambda3(rho) = w on [rho_-, rho_hi]; lambda3 is strictly
  // increasing along the curve, so safeguarded Newton with a bisection
  // fallback always lands.
  double rho_of_lambda3(double w, double rho_hi) const {
    double lo = left_.rho, hi = rho_hi;
    if (lambda3_at(lo) - w >= 0.0) return lo;
    if (lambda3_at(hi) - w <= 0.0) return hi;
    double rho = 0.5 * (lo + hi);
    for (int it = 0; it < 80; ++it) {
      const double f = lambda3_at(rho) - w;
      if (std::abs(f) < 1e-13 * std::max(1.0, std::abs(w))) return rho;
      if (f > 0.0)
        hi = rho;
      else
        lo = rho;
      // dlambda3/drho = c/rho + (d2P + d2Pphi)/(2c), all terms analytic
      const double c2 = wave_speed_sq(rho, left_.S, *model_);
      const double c = std::sqrt(c2);
      const double d2P = (10.0 / 9.0) * A_i() / std::cbrt(rho);
      const double slope = c / rho + (d2P + pphi_pressure(*model_, rho, rho).d2) / (2.0 * c);
      double next = rho - f / slope;
      if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
      if (hi - lo < 4e-16 * std::max(1.0, lo)) return 0.5 * (lo + hi);
      rho = next;
    }
    return rho;
  }

 private:
  EulerState left_;
  const ElectronDensityModel* model_;
  double quad_tol_;
};

}  // namespace vpb
