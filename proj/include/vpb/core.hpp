#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpb {

// Gas constant for the monatomic model; fixed so that the internal energy
// identity E = (3/2) R theta = theta holds exactly.
inline constexpr double kGasConstant = 2.0 / 3.0;

// Entropy scale constant k = 1/(2*pi*e) entering theta = (3/2) k e^S rho^(2/3).
inline const double kEntropyConst = 1.0 / (2.0 * M_PI * std::exp(1.0));

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec3& a) { return dot(a, a); }

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

struct FluidTriple {
  double rho = 1.0;
  Vec3 u{0.0, 0.0, 0.0};
  double theta = 1.0;

  void validate() const {
    if (!(rho > 0.0)) throw std::invalid_argument("FluidTriple: rho must be positive");
    if (!(theta > 0.0)) throw std::invalid_argument("FluidTriple: theta must be positive");
  }
};

struct FluidMoments {
  double mass = 0.0;
  Vec3 momentum{0.0, 0.0, 0.0};
  double energy = 0.0;  // total energy density rho*(E + |u|^2/2)
};

// Entropy S(rho,theta) = -(2/3) ln rho + ln((4/3) pi theta) + 1.
inline double entropy_of(double rho, double theta) {
  return -(2.0 / 3.0) * std::log(rho) + std::log((4.0 / 3.0) * M_PI * theta) + 1.0;
}

// Inverse relation theta = (3/2) k e^S rho^(2/3).
inline double theta_of_entropy(double rho, double S) {
  return 1.5 * kEntropyConst * std::exp(S) * std::cbrt(rho * rho);
}

// Thermodynamic pressure P(rho,S) = k e^S rho^(5/3) = (2/3) rho theta.
inline double pressure_of_entropy(double rho, double S) {
  return kEntropyConst * std::exp(S) * std::pow(rho, 5.0 / 3.0);
}

inline double sq(double x) { return x * x; }

}  // namespace vpb
