#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace photonpos {

using Complex = std::complex<double>;
using Vec3R = Eigen::Vector3d;
using Vec3C = Eigen::Vector3cd;
using Mat3R = Eigen::Matrix3d;
using Mat3C = Eigen::Matrix3cd;
using Mat2C = Eigen::Matrix2cd;

/// Physical constants entering the x-representation prefactor sqrt(hbar*c)
/// and the hbar-linear term of the phase-space image.
struct Constants {
  double hbar = 1.0;
  double c = 1.0;

  Constants() = default;
  Constants(double hbar_, double c_) : hbar(hbar_), c(c_) {
    if (!(hbar > 0.0) || !(c > 0.0))
      throw std::invalid_argument("Constants: hbar and c must be positive");
  }
};

/// Row index j is the vector component, as in (E)_{j mu} = E_{mu j};
/// Gamma matrices act by (Gamma_l Psi)_j = Gamma_{jml} Psi_m.
inline constexpr double kAlgebraTol = 1e-12;

}  // namespace photonpos
