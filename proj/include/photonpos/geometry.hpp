#pragma once

#include <functional>
#include <string>

#include "photonpos/types.hpp"

namespace photonpos {

/// Scalar gauge function on momentum space, e.g. the rotation angle
/// alpha(k) of a GeneralRotation gauge.
using ScalarField = std::function<double(const Vec3R&)>;
/// Optional analytic gradient for a ScalarField.
using GradField = std::function<Vec3R(const Vec3R&)>;

/// Relative radius of the exclusion tube around each gauge's cut;
/// avoids catastrophic cancellation in 1/(|k| - k3) near the cut.
inline constexpr double kCutTubeFactor = 1e-9;

enum class GaugeKind {
  StereoNorth,      // cut: nonnegative k3-axis
  Spherical,        // cut: whole k3-axis
  StereoSouth,      // cut: nonpositive k3-axis
  GeneralRotation,  // stereo-north rotated by alpha(k); cut: as declared
  UnitaryRotation   // complex transverse mixing by U_perp(k)
};

/// A gauge fixes the transverse dyad (E1, E2) up to the declared rotation
/// or unitary mixing, together with the excluded set where the triad (and
/// hence the connection) is singular.
class Gauge {
 public:
  static Gauge stereo_north();
  static Gauge spherical();
  static Gauge stereo_south();
  /// Real rotation by alpha(k); a = cos(alpha), b = sin(alpha) so that
  /// a^2 + b^2 = 1 holds by construction.  Domain is the stereo-north
  /// domain (the rotation itself is assumed smooth there).
  static Gauge general_rotation(ScalarField alpha, GradField alpha_grad = {});
  /// Unitary transverse mixing parametrized by real functions
  /// beta, alpha, psi, delta (phase, rotation, relative phases).
  static Gauge unitary_rotation(ScalarField alpha, ScalarField beta,
                                ScalarField psi, ScalarField delta,
                                GradField alpha_grad = {}, GradField beta_grad = {},
                                GradField psi_grad = {}, GradField delta_grad = {});

  GaugeKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Distance from k to the gauge's excluded set.
  double cut_distance(const Vec3R& k) const;
  /// True when k is off the excluded set by margin_factor * delta_cut,
  /// delta_cut = kCutTubeFactor * |k|.
  bool in_domain(const Vec3R& k, double margin_factor = 1.0) const;
  void require_in_domain(const Vec3R& k, double margin_factor = 1.0) const;

  /// The rotation pair (a, b) relating this gauge's dyad to stereo-north,
  /// a^2 + b^2 = 1.  Identity for StereoNorth and UnitaryRotation.
  void ab_value(const Vec3R& k, double& a, double& b) const;
  /// The gauge term (a d_l b - b d_l a) entering the Sigma coefficient of
  /// the closed-form connection and the Berry potential.  Analytic for the
  /// named gauges; numeric gradient of alpha unless one was registered.
  Vec3R ab_gradient_term(const Vec3R& k) const;

  /// Scalar functions of the UnitaryRotation gauge with their gradients
  /// (numeric central differences unless registered).
  double fn(int which, const Vec3R& k) const;     // 0:alpha 1:beta 2:psi 3:delta
  Vec3R fn_grad(int which, const Vec3R& k) const;

 private:
  GaugeKind kind_;
  std::string name_;
  ScalarField f_[4];   // alpha, beta, psi, delta
  GradField g_[4];
};

/// Stereographic coordinates (xi, eta, zeta): planar coordinates of the
/// momentum direction projected from the north pole, zeta = |k| > 0.
struct StereoCoords {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
};

StereoCoords to_stereo(const Vec3R& k);
Vec3R from_stereo(const StereoCoords& s);

/// Orthonormal (possibly complex) triad at a base point: columns E1, E2, E3
/// with E3 = k/|k| and E1, E2 spanning the transverse plane.
struct Frame {
  Mat3C E = Mat3C::Zero();  // columns are E_mu
  Vec3R k = Vec3R::Zero();
  Gauge gauge = Gauge::stereo_north();

  Vec3C E1() const { return E.col(0); }
  Vec3C E2() const { return E.col(1); }
  Vec3C E3() const { return E.col(2); }
};

/// Triad obtained from the stereographic coordinate basis, expressed in
/// spherical angles of k; regular off the nonnegative k3-axis (the theta=pi
/// ray is included, with phi := 0 there for determinism).
Frame frame_stereo_north(const Vec3R& k);
/// Spherical-coordinate triad (theta-hat, phi-hat, r-hat); regular off the
/// whole k3-axis.
Frame frame_spherical(const Vec3R& k);
/// Stereographic projection from the south pole; regular off the
/// nonpositive k3-axis.  Equals frame_stereo_north rotated by
/// (a, b) = (cos 2 phi, sin 2 phi) where both are defined.
Frame frame_stereo_south(const Vec3R& k);
/// Frame of an arbitrary gauge at k.
Frame frame_for(const Gauge& g, const Vec3R& k);

/// E1' = a E1 - b E2, E2' = b E1 + a E2, E3' = E3.  Requires a^2+b^2 = 1.
Frame frame_rotate(const Frame& f, double a, double b);
/// E' = E U with U = diag(U_perp, 1); requires U_perp unitary.
Frame frame_unitary(const Frame& f, const Mat2C& u_perp);

/// Scaled triad e_mu = |k|^s E_mu and its dual e^mu = |k|^{-s} E^mu.
/// Columns of `e` are e_mu; rows of `dual` are e^mu, so dual * e = 1.
struct ScaledTriad {
  Mat3C e = Mat3C::Zero();
  Mat3C dual = Mat3C::Zero();
};
ScaledTriad scaled_triad(const Frame& f, double s);

/// Spherical angles of k with atan2 conventions; phi = 0 on the k3-axis.
void spherical_angles(const Vec3R& k, double& theta, double& phi);

}  // namespace photonpos
