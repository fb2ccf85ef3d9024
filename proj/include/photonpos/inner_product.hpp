#pragma once

#include "photonpos/connection.hpp"
#include "photonpos/quadrature.hpp"

namespace photonpos {

/// Floor for relative-residual denominators.
inline constexpr double kResidualFloor = 1e-300;

/// Weighted scalar product int d^3k / ((2 pi)^3 |k|^{2s}) Phi^dag Psi over
/// the intersection of the sections' support boxes.
QuadResult weighted_inner(const WaveSection& phi, const WaveSection& psi, double s,
                          const QuadratureSpec& q = {});

/// Bialynicki-Birula scalar product: the s = 1/2 weight |k|^{-1}.
QuadResult bb_inner(const WaveSection& phi, const WaveSection& psi,
                    const QuadratureSpec& q = {});

/// Anti-Hermiticity defect (conj <Phi | D_l Psi>_s) + <Psi | D_l Phi>_s with
/// the weight exponent taken from `weight_s` and the connection from
/// `params`; vanishes exactly when weight_s == params.s.
Complex antihermiticity_residual(const WaveSection& phi, const WaveSection& psi, int l,
                                 const ConnectionParams& params, double weight_s,
                                 const QuadratureSpec& q = {});

/// Matched-weight version (weight_s = params.s), as in the defining relation.
Complex antihermiticity_residual(const WaveSection& phi, const WaveSection& psi, int l,
                                 const ConnectionParams& params,
                                 const QuadratureSpec& q = {});

}  // namespace photonpos
