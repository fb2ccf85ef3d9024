#pragma once

#include <array>
#include <functional>

#include "photonpos/geometry.hpp"
#include "photonpos/wave_section.hpp"

namespace photonpos {

/// Connection parameters: scalar-product weight s (the |k|^{-2s} weight;
/// s = 1/2 is the Bialynicki-Birula case) and the gauge fixing the triad.
struct ConnectionParams {
  double s = 0.5;
  Gauge gauge = Gauge::stereo_north();
};

/// Default finite-difference step: balances truncation and roundoff for
/// double precision with the two-level Richardson scheme used throughout.
inline double default_fd_step(const Vec3R& k) { return 1e-5 * std::max(1.0, k.norm()); }

/// The three connection matrices Gamma_l at a base point, acting by
/// (Gamma_l Psi)_j = Gamma_{jml} Psi_m.
struct GammaMatrices {
  std::array<Mat3C, 3> g;
  const Mat3C& operator[](int l) const { return g[l]; }
  Mat3C& operator[](int l) { return g[l]; }
};

/// Torsion components Q_{jml} = Gamma_{jml} - Gamma_{jlm}, antisymmetric
/// in (m, l).
struct TorsionTensor {
  std::array<double, 27> q{};
  double& operator()(int j, int m, int l) { return q[9 * j + 3 * m + l]; }
  double operator()(int j, int m, int l) const { return q[9 * j + 3 * m + l]; }
};

/// Sigma coefficient of the closed-form connection for a gauge:
/// c_l = eps_{lm3} k_m / (|k| (|k| - k3)) + (a d_l b - b d_l a),
/// reduced per gauge so each is regular on its own domain
/// (spherical: eps_{lm3} k_m k3 / (|k| rho^2); stereo-south:
/// -eps_{lm3} k_m / (|k| (|k| + k3))).
Vec3R sigma_coefficient(const Vec3R& k, const Gauge& gauge);

/// Gamma_l = M d_l M^{-1} with M the scaled-triad matrix (columns
/// |k|^s E_mu), derivatives by Richardson-extrapolated central differences.
GammaMatrices gamma_from_frame(const Vec3R& k, const ConnectionParams& params,
                               double h = 0.0);

/// Same differencing applied to an arbitrary triad field (columns are the
/// frame legs); used to check synthetic triads.
GammaMatrices gamma_from_triad_field(const std::function<Mat3C(const Vec3R&)>& triad,
                                     const Vec3R& k, double h);

/// Closed form Gamma_l = -s k_l/|k|^2 1 + A_l with
/// i A_l = (k x S)_l / |k|^2 + c_l Sigma.
GammaMatrices gamma_closed_form(const Vec3R& k, const ConnectionParams& params);

/// Closed form for a UnitaryRotation gauge: expansion over
/// R_j = E_perp sigma_j E_perp^T with the stereo-north base dyad.
GammaMatrices gamma_unitary(const Vec3R& k, const ConnectionParams& params);

/// Explicit connection coefficients for a GeneralRotation-type gauge with
/// rotation angle alpha:
/// Gamma_{jml} = -(1/|k|^2) (s d_jm k_l - d_ml k_j + d_jl k_m
///               + eps_{rjm} eps_{lp3} k_p k_r / (|k| - k3)
///               + |k| eps_{rjm} k_r d_l alpha).
double gamma_coefficient_explicit(const Vec3R& k, double s, const Vec3R& grad_alpha,
                                  int j, int m, int l);

/// Torsion tensor from the explicit coefficients; alpha enters through its
/// gradient (numeric unless registered on the gauge).
TorsionTensor torsion(const Vec3R& k, double s, const Gauge& gauge);

/// Max-norm of the curvature R_{lm} = d_l Gamma_m - d_m Gamma_l +
/// [Gamma_l, Gamma_m] over all (l, m), derivatives by Richardson-extrapolated
/// central differences of the supplied Gamma field.
double curvature_residual_of(const std::function<GammaMatrices(const Vec3R&)>& gamma_fn,
                             const Vec3R& k, double h);
double curvature_residual(const Vec3R& k, const ConnectionParams& params, double h = 0.0);

/// (D_l Psi)_j = d_l Psi_j + Gamma_{jml} Psi_m; the derivative comes from
/// the section's analytic Jacobian when present, else central differences.
Vec3C covariant_derivative(const WaveSection& section, const Vec3R& k, int l,
                           const ConnectionParams& params, double h = 0.0);

/// Gamma matrices for any gauge kind (dispatches to the unitary expansion
/// when needed).
GammaMatrices gamma_for(const Vec3R& k, const ConnectionParams& params);

}  // namespace photonpos
