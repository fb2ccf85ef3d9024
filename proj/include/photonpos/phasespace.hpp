#pragma once

#include <array>

#include "photonpos/geometry.hpp"

namespace photonpos {

/// Point of the 3 x 3 grid sector of phase space, phi_m = 2 pi m / 3.
struct GridPoint {
  int m = 0;
  int n = 0;
  GridPoint() = default;
  GridPoint(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || m > 2 || n < 0 || n > 2)
      throw std::out_of_range("GridPoint: indices must lie in {0, 1, 2}");
  }
  double phi() const { return 2.0 * M_PI * m / 3.0; }
};

/// Operator on the 3-dimensional grid space spanned by |n>.
using GridOperator = Mat3C;

GridOperator grid_number_operator();  // n-hat = sum n |n><n|
GridOperator grid_phase_operator();   // phi-hat = sum phi_m |phi_m><phi_m|
Vec3C grid_phi_ket(int m);            // |phi_m> = 3^{-1/2} sum_n e^{i n phi_m} |n>

/// Displacement operator D(k, l) = e^{-i pi k l/3} e^{i k phi-hat} e^{i 2 pi l n-hat/3}.
GridOperator grid_d_operator(int kidx, int lidx);
/// All four printed expressions (two product orderings, two sum expansions);
/// they coincide entry-wise.
std::array<GridOperator, 4> grid_d_operator_forms(int kidx, int lidx);

/// Scalar factor (p_r/|p|) eps_{r, ((n+1) mod 3)+1, ((n+2) mod 3)+1} inside
/// the phase-space image.
double helicity_spin_projection(const Vec3R& p, int n);

/// Closed-form phase-space image of the position operator:
/// X_l = x_l + 2 hbar [ ... ] sin(phi_m), gauge entering through the
/// Sigma coefficient.
double phase_space_position(const Vec3R& p, const Vec3R& x, const GridPoint& g, int l,
                            const Gauge& gauge, const Constants& constants = {});

}  // namespace photonpos
