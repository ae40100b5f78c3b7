#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpb/core.hpp"
#include "vpb/quadrature.hpp"

namespace vpb {

// Electron density rho_e(phi) with the structural assumptions
//   (A1) rho_e(0) = 1 with 0 inside the domain,
//   (A2) rho_e > 0 and rho_e' > 0,
//   (A3) rho_e * rho_e'' <= (rho_e')^2.
// Built-in families:
//   boltzmann(A_e):        rho_e = exp(phi/A_e), domain (-inf, inf)
//   general_gamma(g, A_e): rho_e = [1 + (g-1)/g * phi/A_e]^(1/(g-1)),
//                          domain (-g*A_e/(g-1), inf); g -> 1 recovers boltzmann
//   user_tabulated:        monotone cubic interpolation of a (phi, rho) table
class ElectronDensityModel {
 public:
  enum class Kind { boltzmann, general_gamma, user_tabulated };

  struct Eval {
    double value;
    double d1;
    double d2;
  };

  static ElectronDensityModel boltzmann(double A_e) {
    if (!(A_e > 0.0)) throw std::invalid_argument("boltzmann: A_e > 0 required");
    ElectronDensityModel m;
    m.kind_ = Kind::boltzmann;
    m.A_e_ = A_e;
    m.phi_min_ = -std::numeric_limits<double>::infinity();
    m.phi_max_ = std::numeric_limits<double>::infinity();
    return m;
  }

  static ElectronDensityModel general_gamma(double gamma_e, double A_e) {
    if (!(gamma_e >= 1.0))
      throw std::invalid_argument("general_gamma: gamma_e >= 1 required");
    if (!(A_e > 0.0)) throw std::invalid_argument("general_gamma: A_e > 0 required");
    if (gamma_e == 1.0) return boltzmann(A_e);
    ElectronDensityModel m;
    m.kind_ = Kind::general_gamma;
    m.gamma_e_ = gamma_e;
    m.A_e_ = A_e;
    m.phi_min_ = -gamma_e * A_e / (gamma_e - 1.0);
    m.phi_max_ = std::numeric_limits<double>::infinity();
    return m;
  }

  // Table rows must be strictly increasing in both phi and rho.
  static ElectronDensityModel user_tabulated(std::vector<double> phi,
                                             std::vector<double> rho) {
    if (phi.size() != rho.size() || phi.size() < 4)
      throw std::invalid_argument("user_tabulated: need >= 4 matching rows");
    for (size_t i = 1; i < phi.size(); ++i)
      if (!(phi[i] > phi[i - 1]))
        throw std::invalid_argument("user_tabulated: phi must be strictly increasing");
    ElectronDensityModel m;
    m.kind_ = Kind::user_tabulated;
    m.tab_phi_ = std::move(phi);
    m.tab_rho_ = std::move(rho);
    m.phi_min_ = m.tab_phi_.front();
    m.phi_max_ = m.tab_phi_.back();
    m.build_pchip();
    return m;
  }

  Kind kind() const { return kind_; }
  double gamma_e() const { return gamma_e_; }
  double A_e() const { return A_e_; }
  double phi_min() const { return phi_min_; }
  double phi_max() const { return phi_max_; }

  double rho_min() const { return density(clamp_in(phi_min_)).value; }
  double rho_max() const { return density(clamp_in(phi_max_)).value; }

  Eval density(double phi) const {
    if (!(phi > phi_min_) || !(phi < phi_max_)) {
      if (kind_ == Kind::user_tabulated && (phi == phi_min_ || phi == phi_max_)) {
        // table endpoints are included
      } else {
        throw std::invalid_argument("electron_density: phi outside model domain");
      }
    }
    switch (kind_) {
      case Kind::boltzmann: {
        const double v = std::exp(phi / A_e_);
        return {v, v / A_e_, v / (A_e_ * A_e_)};
      }
      case Kind::general_gamma: {
        const double base = 1.0 + (gamma_e_ - 1.0) / gamma_e_ * phi / A_e_;
        const double p = 1.0 / (gamma_e_ - 1.0);
        const double v = std::pow(base, p);
        const double d1 = std::pow(base, p - 1.0) / (gamma_e_ * A_e_);
        const double d2 = (2.0 - gamma_e_) / (gamma_e_ * A_e_) *
                          std::pow(base, p - 2.0) / (gamma_e_ * A_e_);
        return {v, d1, d2};
      }
      case Kind::user_tabulated:
        return pchip_eval(phi);
    }
    throw std::logic_error("electron_density: unreachable");
  }

  // phi with rho_e(phi) = rho; analytic for the built-in kinds, safeguarded
  // Newton on the monotone interpolant otherwise.
  double invert(double rho) const {
    switch (kind_) {
      case Kind::boltzmann:
        if (!(rho > 0.0)) throw std::invalid_argument("invert_density: rho out of range");
        return A_e_ * std::log(rho);
      case Kind::general_gamma: {
        if (!(rho > 0.0)) throw std::invalid_argument("invert_density: rho out of range");
        return gamma_e_ / (gamma_e_ - 1.0) * A_e_ *
               (std::pow(rho, gamma_e_ - 1.0) - 1.0);
      }
      case Kind::user_tabulated: {
        if (!(rho >= tab_rho_.front()) || !(rho <= tab_rho_.back()))
          throw std::invalid_argument("invert_density: rho outside table range");
        double lo = phi_min_, hi = phi_max_;
        double phi = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
          const Eval e = pchip_eval(phi);
          const double r = e.value - rho;
          if (std::abs(r) < 1e-13 * std::max(1.0, std::abs(rho))) return phi;
          if (r > 0.0)
            hi = phi;
          else
            lo = phi;
          double step = (e.d1 > 0.0) ? phi - r / e.d1 : 0.5 * (lo + hi);
          if (!(step > lo) || !(step < hi)) step = 0.5 * (lo + hi);
          phi = step;
        }
        return phi;
      }
    }
    throw std::logic_error("invert_density: unreachable");
  }

 private:
  Kind kind_ = Kind::boltzmann;
  double gamma_e_ = 1.0;
  double A_e_ = 1.0;
  double phi_min_ = 0.0;
  double phi_max_ = 0.0;
  std::vector<double> tab_phi_, tab_rho_, tab_d_;  // Fritsch-Carlson slopes

  double clamp_in(double phi) const {
    const double span = std::isfinite(phi_max_ - phi_min_)
                            ? (phi_max_ - phi_min_)
                            : std::max(1.0, std::abs(phi_min_)) * 2.0;
    const double eps = 1e-9 * span;
    double lo = std::isfinite(phi_min_) ? phi_min_ + eps : -40.0 * A_e_;
    double hi = std::isfinite(phi_max_) ? phi_max_ - eps : 40.0 * A_e_;
    return std::clamp(phi, lo, hi);
  }

  void build_pchip() {
    const size_t n = tab_phi_.size();
    std::vector<double> sec(n - 1);
    for (size_t i = 0; i + 1 < n; ++i)
      sec[i] = (tab_rho_[i + 1] - tab_rho_[i]) / (tab_phi_[i + 1] - tab_phi_[i]);
    tab_d_.assign(n, 0.0);
    tab_d_[0] = sec[0];
    tab_d_[n - 1] = sec[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
      if (sec[i - 1] * sec[i] <= 0.0) {
        tab_d_[i] = 0.0;
      } else {
        const double w1 = 2.0 * (tab_phi_[i + 1] - tab_phi_[i]) +
                          (tab_phi_[i] - tab_phi_[i - 1]);
        const double w2 = (tab_phi_[i + 1] - tab_phi_[i]) +
                          2.0 * (tab_phi_[i] - tab_phi_[i - 1]);
        tab_d_[i] = (w1 + w2) / (w1 / sec[i - 1] + w2 / sec[i]);
      }
    }
  }

  Eval pchip_eval(double phi) const {
    const auto it = std::upper_bound(tab_phi_.begin(), tab_phi_.end(), phi);
    size_t i = (it == tab_phi_.begin()) ? 0 : (it - tab_phi_.begin() - 1);
    i = std::min(i, tab_phi_.size() - 2);
    const double h = tab_phi_[i + 1] - tab_phi_[i];
    const double t = (phi - tab_phi_[i]) / h;
    const double y0 = tab_rho_[i], y1 = tab_rho_[i + 1];
    const double d0 = tab_d_[i], d1 = tab_d_[i + 1];
    const double h00 = (1 + 2 * t) * sq(1 - t), h10 = t * sq(1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    const double v = h00 * y0 + h * h10 * d0 + h01 * y1 + h * h11 * d1;
    const double dh00 = 6 * t * (t - 1), dh10 = (1 - t) * (1 - 3 * t);
    const double dh01 = -dh00, dh11 = t * (3 * t - 2);
    const double dv = (dh00 * y0 + h * dh10 * d0 + dh01 * y1 + h * dh11 * d1) / h;
    const double d2h00 = 12 * t - 6, d2h10 = 6 * t - 4;
    const double d2h01 = -d2h00, d2h11 = 6 * t - 2;
    const double d2v =
        (d2h00 * y0 + h * d2h10 * d0 + d2h01 * y1 + h * d2h11 * d1) / (h * h);
    return {v, dv, d2v};
  }
};

struct AssumptionReport {
  bool a1_pass = false, a2_pass = false, a3_pass = false;
  double a1_residual = 0.0;    // |rho_e(0) - 1|
  double a2_margin = 0.0;      // min over samples of min(rho_e, rho_e')
  double a3_margin = 0.0;      // min over samples of (rho_e')^2 - rho_e rho_e''
  double a2_worst_phi = 0.0;
  double a3_worst_phi = 0.0;
  bool pass() const { return a1_pass && a2_pass && a3_pass; }
};

inline AssumptionReport check_assumption_A(const ElectronDensityModel& m,
                                           int n_samples = 1000) {
  AssumptionReport r;
  const double lo = std::isfinite(m.phi_min()) ? m.phi_min() : -25.0 * m.A_e();
  const double hi = std::isfinite(m.phi_max()) ? m.phi_max() : 25.0 * m.A_e();
  const double span = hi - lo;
  r.a2_margin = std::numeric_limits<double>::infinity();
  r.a3_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const double phi = lo + span * (i + 0.5) / n_samples;
    ElectronDensityModel::Eval e;
    try {
      e = m.density(phi);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const double m2 = std::min(e.value, e.d1);
    if (m2 < r.a2_margin) {
      r.a2_margin = m2;
      r.a2_worst_phi = phi;
    }
    const double m3 = e.d1 * e.d1 - e.value * e.d2;
    if (m3 < r.a3_margin) {
      r.a3_margin = m3;
      r.a3_worst_phi = phi;
    }
  }
  if (0.0 > m.phi_min() && 0.0 < m.phi_max()) {
    r.a1_residual = std::abs(m.density(0.0).value - 1.0);
    r.a1_pass = r.a1_residual <= 1e-9;
  }
  r.a2_pass = r.a2_margin > 0.0;
  r.a3_pass = r.a3_margin >= -1e-12;
  return r;
}

struct PphiEval {
  double value;  // P^phi(rho) with P^phi(rho_ref) = 0
  double d1;     // rho_e/rho_e' at phi = rho_e^{-1}(rho)
  double d2;     // ((rho_e')^2 - rho_e rho_e'')/(rho_e')^3
};

// Pressure generated by the potential force under quasineutrality:
//   P^phi(rho) = int_ref^rho s / rho_e'(rho_e^{-1}(s)) ds.
inline PphiEval pphi_pressure(const ElectronDensityModel& m, double rho, double rho_ref,
                              double abs_tol = 1e-10) {
  PphiEval out;
  const auto integrand = [&m](double s) {
    const double phi = m.invert(s);
    return s / m.density(phi).d1;
  };
  out.value = integrate_adaptive(integrand, rho_ref, rho, abs_tol);
  const double phi = m.invert(rho);
  const auto e = m.density(phi);
  out.d1 = e.value / e.d1;
  out.d2 = (e.d1 * e.d1 - e.value * e.d2) / (e.d1 * e.d1 * e.d1);
  return out;
}

}  // namespace vpb
