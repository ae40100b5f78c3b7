#pragma once

#include <cmath>
#include <stdexcept>

#include "vpb/burgers.hpp"
#include "vpb/core.hpp"
#include "vpb/electron_model.hpp"
#include "vpb/euler_wave.hpp"

namespace vpb {

struct ProfilePoint {
  double rho;
  double u1;
  double theta;
  double phi;
};

// Quasineutral 3-rarefaction profile connecting [rho_-,u1_-,theta_-] to a
// right state on the R3 curve. The smooth-in-time version rides the smooth
// Burgers solution of lambda3; the centered version rides the fan x/t.
class RarefactionProfile {
 public:
  RarefactionProfile(const EulerState& left, double rho_right,
                     const ElectronDensityModel& model, double epsilon)
      : model_(&model),
        curve_(left, model),
        burgers_(make_burgers(curve_, rho_right, epsilon)),
        rho_right_(rho_right) {
    const WavePoint wp = curve_.at(rho_right);
    right_ = EulerState{rho_right, wp.u1, left.S};
    phi_minus_ = model.invert(left.rho);
    phi_plus_ = model.invert(rho_right);
  }

  const EulerState& left() const { return curve_.left(); }
  const EulerState& right() const { return right_; }
  const WaveCurveR3& curve() const { return curve_; }
  const BurgersWave& burgers() const { return burgers_; }
  const ElectronDensityModel& model() const { return *model_; }
  double S_i() const { return curve_.S_i(); }
  double A_i() const { return curve_.A_i(); }
  double phi_minus() const { return phi_minus_; }
  double phi_plus() const { return phi_plus_; }
  double epsilon() const { return burgers_.epsilon; }

  ProfilePoint smooth(double t, double x) const {
    return from_speed(burgers_smooth(burgers_, t, x));
  }

  ProfilePoint centered(double xi) const {
    return from_speed(burgers_centered(burgers_.w_minus, burgers_.w_plus, xi));
  }

  // d/dx of (u1, theta) along the smooth profile, used by the microscopic
  // correction and the sign functionals. Chain rule through
  // w = lambda3(rho): drho/dx = dw/dx / lambda3'(rho).
  struct SmoothGradients {
    double drho_dx;
    double du1_dx;
    double dtheta_dx;
  };

  SmoothGradients smooth_gradients(double t, double x) const {
    const double w = burgers_smooth(burgers_, t, x);
    const double dwdx = burgers_smooth_dx(burgers_, t, x);
    const double rho = rho_of_speed(w);
    const double c2 = wave_speed_sq(rho, S_i(), *model_);
    const double c = std::sqrt(c2);
    const double d2P = (10.0 / 9.0) * A_i() / std::cbrt(rho);
    const double lam3_slope = c / rho + (d2P + pphi_pressure(*model_, rho, rho).d2) / (2.0 * c);
    SmoothGradients g;
    g.drho_dx = dwdx / lam3_slope;
    g.du1_dx = (c / rho) * g.drho_dx;
    g.dtheta_dx = A_i() / std::cbrt(rho) * g.drho_dx;
    return g;
  }

 private:
  static BurgersWave make_burgers(const WaveCurveR3& curve, double rho_right,
                                  double epsilon) {
    if (!(rho_right > curve.left().rho))
      throw std::invalid_argument("RarefactionProfile: rho_+ > rho_- required");
    const double wm = curve.lambda3_at(curve.left().rho);
    const double wp = curve.lambda3_at(rho_right);
    return BurgersWave(wm, wp, epsilon);
  }

  double rho_of_speed(double w) const {
    if (w <= burgers_.w_minus) return curve_.left().rho;
    if (w >= burgers_.w_plus) return rho_right_;
    return curve_.rho_of_lambda3(w, rho_right_);
  }

  ProfilePoint from_speed(double w) const {
    ProfilePoint p;
    p.rho = rho_of_speed(w);
    const WavePoint wp = curve_.at(p.rho);
    p.u1 = wp.u1;
    p.theta = wp.theta;
    p.phi = model_->invert(p.rho);
    return p;
  }

  const ElectronDensityModel* model_;
  WaveCurveR3 curve_;
  BurgersWave burgers_;
  double rho_right_;
  EulerState right_;
  double phi_minus_ = 0.0, phi_plus_ = 0.0;
};

}  // namespace vpb
