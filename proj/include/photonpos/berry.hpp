#pragma once

#include <functional>
#include <vector>

#include "photonpos/connection.hpp"

namespace photonpos {

/// Loops closer to a gauge cut than this many delta_cut tubes are rejected
/// (the Berry potential diverges on the cut).
inline constexpr double kLoopCutMargin = 10.0;

/// Parametrized curve in momentum space for transport and Berry integrals:
/// either a parametrization (with optional derivative) or a polyline.
struct LoopSpec {
  std::function<Vec3R(double)> k;
  std::function<Vec3R(double)> dk;  // optional; central differences otherwise
  double tau0 = 0.0;
  double tau1 = 1.0;
  bool closed = false;
  Gauge gauge = Gauge::stereo_north();
  int lambda = +1;
  std::vector<Vec3R> nodes;  // polyline representation when non-empty

  /// Circle at polar angle theta traversed once in phi, radius |k|.
  static LoopSpec circle(double theta, double radius, const Gauge& gauge, int lambda);
  static LoopSpec polyline(std::vector<Vec3R> nodes, const Gauge& gauge, int lambda);

  Vec3R point(double tau) const;
  Vec3R velocity(double tau) const;
  /// Throws when the sampled curve leaves the gauge domain or approaches
  /// the cut within kLoopCutMargin tubes.
  void require_valid(int samples = 256) const;
};

/// Berry potential A_l = -lambda (eps_{lm3} k_m/(|k|(|k|-k3)) + a d_l b - b d_l a),
/// reduced per gauge exactly like the connection's Sigma coefficient.
Vec3R berry_potential(const Vec3R& k, int lambda, const Gauge& gauge);

struct TransportResult {
  Vec3C psi = Vec3C::Zero();
  double phase = 0.0;       // accumulated arg, continuous in tau
  double max_drift = 0.0;   // max ||Sigma(k) psi - lambda psi||/||psi|| along the way
  int steps = 0;
};

/// Integrates d Psi/d tau + i lambda (...) Psi = 0 with an adaptive
/// embedded Runge-Kutta pair.  psi0 must be a helicity-lambda eigenvector
/// at k(tau0).  The helicity drift against the moving Sigma(k(tau)) is
/// recorded, not corrected.
TransportResult transport(const LoopSpec& curve, const Vec3C& psi0,
                          double rel_tol = 1e-10);

/// gamma[C] = closed line integral of the Berry potential.
double berry_phase_integral(const LoopSpec& curve);

/// Line integral of A . dk along the (possibly open) curve.
double berry_line_integral(const LoopSpec& curve);

/// Closed forms for theta-circles in the three example gauges:
/// gamma_1 = lambda 2 pi (cos theta + 1), gamma_2 = lambda 2 pi cos theta,
/// gamma_3 = lambda 2 pi (cos theta - 1).
double berry_phase_closed(double theta, int lambda, int which);

/// Commutator [D'_l, D'_m] of the helicity connection
/// D'_l = d_l + i c_l Sigma (nonzero in general: monopole plus transverse
/// spin terms).
Mat3C dprime_curvature(const Vec3R& k, int l, int m, const Gauge& gauge);

/// D'_l applied to a section (used by the finite-difference oracle for the
/// curvature).
Vec3C dprime_apply(const WaveSection& s, const Vec3R& k, int l, const Gauge& gauge,
                   double h = 0.0);

}  // namespace photonpos
