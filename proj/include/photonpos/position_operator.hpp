#pragma once

#include "photonpos/connection.hpp"
#include "photonpos/wave_section.hpp"

namespace photonpos {

/// (X_l Psi)(k) = i (d_l Psi + Gamma_l Psi)(k).
Vec3C apply_position(const WaveSection& section, const Vec3R& k, int l,
                     const ConnectionParams& params, double h = 0.0);

/// Compact form (X_l Psi)_j = i e_{mu j} d_l (e^mu_n Psi_n): an independent
/// evaluation path that differentiates the frame components of the section
/// instead of using Gamma.
Vec3C apply_position_compact(const WaveSection& section, const Vec3R& k, int l,
                             const ConnectionParams& params, double h = 0.0);

/// ([X_l, X_m] Psi)(k) by nested differencing; the outer step is
/// sqrt(h)-scaled to control the second-derivative error.
Vec3C commutator_residual(const WaveSection& section, const Vec3R& k, int l, int m,
                          const ConnectionParams& params, double h = 0.0);

/// First three terms of the general operator at s = 1/2:
/// i Psi' - i k_l/(2|k|^2) Psi + ((k x S)_l/|k|^2) Psi.  Components do not
/// commute; kept for comparison.
Vec3C pryce_position(const WaveSection& section, const Vec3R& k, int l,
                     double h = 0.0);

/// Commutator of the Pryce operator by the same nested differencing.
Vec3C pryce_commutator(const WaveSection& section, const Vec3R& k, int l, int m,
                       double h = 0.0);

}  // namespace photonpos
