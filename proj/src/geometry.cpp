#include "photonpos/geometry.hpp"

#include <cmath>

namespace photonpos {

namespace {

double numeric_grad_component(const ScalarField& f, const Vec3R& k, int l) {
  const double h = 1e-6 * std::max(1.0, k.norm());
  Vec3R kp = k, km = k;
  kp[l] += h;
  km[l] -= h;
  Vec3R kp2 = k, km2 = k;
  kp2[l] += 0.5 * h;
  km2[l] -= 0.5 * h;
  const double d1 = (f(kp) - f(km)) / (2.0 * h);
  const double d2 = (f(kp2) - f(km2)) / h;
  return (4.0 * d2 - d1) / 3.0;  // one Richardson level
}

Vec3R numeric_grad(const ScalarField& f, const Vec3R& k) {
  Vec3R g;
  for (int l = 0; l < 3; ++l) g[l] = numeric_grad_component(f, k, l);
  return g;
}

}  // namespace

Gauge Gauge::stereo_north() {
  Gauge g;
  g.kind_ = GaugeKind::StereoNorth;
  g.name_ = "stereo-north";
  return g;
}

Gauge Gauge::spherical() {
  Gauge g;
  g.kind_ = GaugeKind::Spherical;
  g.name_ = "spherical";
  return g;
}

Gauge Gauge::stereo_south() {
  Gauge g;
  g.kind_ = GaugeKind::StereoSouth;
  g.name_ = "stereo-south";
  return g;
}

Gauge Gauge::general_rotation(ScalarField alpha, GradField alpha_grad) {
  Gauge g;
  g.kind_ = GaugeKind::GeneralRotation;
  g.name_ = "general-rotation";
  g.f_[0] = std::move(alpha);
  g.g_[0] = std::move(alpha_grad);
  return g;
}

Gauge Gauge::unitary_rotation(ScalarField alpha, ScalarField beta, ScalarField psi,
                              ScalarField delta, GradField alpha_grad,
                              GradField beta_grad, GradField psi_grad,
                              GradField delta_grad) {
  Gauge g;
  g.kind_ = GaugeKind::UnitaryRotation;
  g.name_ = "unitary-rotation";
  g.f_[0] = std::move(alpha);
  g.f_[1] = std::move(beta);
  g.f_[2] = std::move(psi);
  g.f_[3] = std::move(delta);
  g.g_[0] = std::move(alpha_grad);
  g.g_[1] = std::move(beta_grad);
  g.g_[2] = std::move(psi_grad);
  g.g_[3] = std::move(delta_grad);
  return g;
}

double Gauge::cut_distance(const Vec3R& k) const {
  const double rho = std::hypot(k[0], k[1]);
  switch (kind_) {
    case GaugeKind::Spherical:
      return rho;
    case GaugeKind::StereoSouth:
      return k[2] <= 0.0 ? rho : k.norm();
    default:  // stereo-north family: cut on the nonnegative k3-axis
      return k[2] >= 0.0 ? rho : k.norm();
  }
}

bool Gauge::in_domain(const Vec3R& k, double margin_factor) const {
  const double kn = k.norm();
  if (!(kn > 0.0)) return false;
  return cut_distance(k) > margin_factor * kCutTubeFactor * kn;
}

void Gauge::require_in_domain(const Vec3R& k, double margin_factor) const {
  if (!in_domain(k, margin_factor))
    throw std::domain_error("momentum on the excluded set of gauge " + name_);
}

void Gauge::ab_value(const Vec3R& k, double& a, double& b) const {
  const double rho2 = k[0] * k[0] + k[1] * k[1];
  switch (kind_) {
    case GaugeKind::Spherical: {
      const double rho = std::sqrt(rho2);
      a = k[0] / rho;
      b = k[1] / rho;
      break;
    }
    case GaugeKind::StereoSouth:
      a = (k[0] * k[0] - k[1] * k[1]) / rho2;
      b = 2.0 * k[0] * k[1] / rho2;
      break;
    case GaugeKind::GeneralRotation: {
      const double al = f_[0](k);
      a = std::cos(al);
      b = std::sin(al);
      break;
    }
    default:
      a = 1.0;
      b = 0.0;
  }
}

Vec3R Gauge::ab_gradient_term(const Vec3R& k) const {
  // a d_l b - b d_l a; equals d_l(winding angle) for the named rotations.
  const double rho2 = k[0] * k[0] + k[1] * k[1];
  switch (kind_) {
    case GaugeKind::Spherical:
      return Vec3R(-k[1] / rho2, k[0] / rho2, 0.0);
    case GaugeKind::StereoSouth:
      return Vec3R(-2.0 * k[1] / rho2, 2.0 * k[0] / rho2, 0.0);
    case GaugeKind::GeneralRotation:
      return fn_grad(0, k);
    default:
      return Vec3R::Zero();
  }
}

double Gauge::fn(int which, const Vec3R& k) const {
  return f_[which] ? f_[which](k) : 0.0;
}

Vec3R Gauge::fn_grad(int which, const Vec3R& k) const {
  if (g_[which]) return g_[which](k);
  if (!f_[which]) return Vec3R::Zero();
  return numeric_grad(f_[which], k);
}

void spherical_angles(const Vec3R& k, double& theta, double& phi) {
  const double rho = std::hypot(k[0], k[1]);
  theta = std::atan2(rho, k[2]);
  phi = (rho == 0.0) ? 0.0 : std::atan2(k[1], k[0]);
}

StereoCoords to_stereo(const Vec3R& k) {
  Gauge::stereo_north().require_in_domain(k);
  const double kn = k.norm();
  StereoCoords s;
  s.xi = k[0] / (kn - k[2]);
  s.eta = k[1] / (kn - k[2]);
  s.zeta = kn;
  return s;
}

Vec3R from_stereo(const StereoCoords& s) {
  if (!(s.zeta > 0.0)) throw std::domain_error("from_stereo: zeta must be positive");
  const double r2 = s.xi * s.xi + s.eta * s.eta;
  return Vec3R(s.zeta * 2.0 * s.xi / (r2 + 1.0), s.zeta * 2.0 * s.eta / (r2 + 1.0),
               s.zeta * (r2 - 1.0) / (r2 + 1.0));
}

Frame frame_stereo_north(const Vec3R& k) {
  Gauge::stereo_north().require_in_domain(k);
  double th, ph;
  spherical_angles(k, th, ph);
  const double c2 = std::cos(0.5 * th) * std::cos(0.5 * th);
  const double st = std::sin(th), cp = std::cos(ph), sp = std::sin(ph);
  const double s2p = std::sin(2.0 * ph);
  Frame f;
  f.k = k;
  f.gauge = Gauge::stereo_north();
  f.E.col(0) = Vec3C(2.0 * c2 * cp * cp - 1.0, c2 * s2p, -st * cp);
  f.E.col(1) = Vec3C(-c2 * s2p, 1.0 - 2.0 * c2 * sp * sp, st * sp);
  f.E.col(2) = Vec3C(st * cp, st * sp, std::cos(th));
  return f;
}

Frame frame_spherical(const Vec3R& k) {
  Gauge::spherical().require_in_domain(k);
  double th, ph;
  spherical_angles(k, th, ph);
  const double st = std::sin(th), ct = std::cos(th);
  const double cp = std::cos(ph), sp = std::sin(ph);
  Frame f;
  f.k = k;
  f.gauge = Gauge::spherical();
  f.E.col(0) = Vec3C(ct * cp, ct * sp, -st);
  f.E.col(1) = Vec3C(-sp, cp, 0.0);
  f.E.col(2) = Vec3C(st * cp, st * sp, ct);
  return f;
}

Frame frame_stereo_south(const Vec3R& k) {
  // Closed form of the rotation of the north triad by
  // (a, b) = (cos 2 phi, sin 2 phi); the phi-winding cancels so the
  // result extends smoothly onto the positive k3-axis.
  Gauge::stereo_south().require_in_domain(k);
  double th, ph;
  spherical_angles(k, th, ph);
  const double s2 = std::sin(0.5 * th) * std::sin(0.5 * th);
  const double st = std::sin(th), cp = std::cos(ph), sp = std::sin(ph);
  const double s2p = std::sin(2.0 * ph);
  Frame f;
  f.k = k;
  f.gauge = Gauge::stereo_south();
  f.E.col(0) = Vec3C(1.0 - 2.0 * s2 * cp * cp, -s2 * s2p, -st * cp);
  f.E.col(1) = Vec3C(-s2 * s2p, 1.0 - 2.0 * s2 * sp * sp, -st * sp);
  f.E.col(2) = Vec3C(st * cp, st * sp, std::cos(th));
  return f;
}

Frame frame_for(const Gauge& g, const Vec3R& k) {
  switch (g.kind()) {
    case GaugeKind::StereoNorth:
      return frame_stereo_north(k);
    case GaugeKind::Spherical:
      return frame_spherical(k);
    case GaugeKind::StereoSouth:
      return frame_stereo_south(k);
    case GaugeKind::GeneralRotation: {
      double a, b;
      g.ab_value(k, a, b);
      Frame f = frame_rotate(frame_stereo_north(k), a, b);
      f.gauge = g;
      return f;
    }
    case GaugeKind::UnitaryRotation: {
      const double al = g.fn(0, k), be = g.fn(1, k);
      const double ps = g.fn(2, k), de = g.fn(3, k);
      const Complex i(0.0, 1.0);
      Mat2C u;
      u << std::exp(i * ps) * std::cos(al), std::exp(i * ps) * std::sin(al),
          -std::exp(-i * ps) * std::sin(al), std::exp(-i * ps) * std::cos(al);
      Mat2C phase = Mat2C::Zero();
      phase(0, 0) = std::exp(i * de);
      phase(1, 1) = std::exp(-i * de);
      u = std::exp(i * be) * u * phase;
      Frame f = frame_unitary(frame_stereo_north(k), u);
      f.gauge = g;
      return f;
    }
  }
  throw std::logic_error("frame_for: unknown gauge kind");
}

Frame frame_rotate(const Frame& f, double a, double b) {
  if (std::abs(a * a + b * b - 1.0) > kAlgebraTol)
    throw std::invalid_argument("frame_rotate: (a, b) must satisfy a^2 + b^2 = 1");
  Frame out = f;
  out.E.col(0) = a * f.E.col(0) - b * f.E.col(1);
  out.E.col(1) = b * f.E.col(0) + a * f.E.col(1);
  return out;
}

Frame frame_unitary(const Frame& f, const Mat2C& u_perp) {
  if ((u_perp.adjoint() * u_perp - Mat2C::Identity()).norm() > 1e-12)
    throw std::invalid_argument("frame_unitary: U_perp must be unitary");
  Mat3C u = Mat3C::Identity();
  u.topLeftCorner<2, 2>() = u_perp;
  Frame out = f;
  out.E = f.E * u;
  return out;
}

ScaledTriad scaled_triad(const Frame& f, double s) {
  const double kn = f.k.norm();
  ScaledTriad t;
  t.e = std::pow(kn, s) * f.E;
  t.dual = std::pow(kn, -s) * f.E.adjoint();
  return t;
}

}  // namespace photonpos
