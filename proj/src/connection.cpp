#include "photonpos/connection.hpp"

#include <cmath>

#include "photonpos/algebra.hpp"

namespace photonpos {

namespace {

constexpr double eps3(int i, int j, int k) {
  return ((i - j) * (j - k) * (k - i)) / 2.0;
}

Mat3C triad_matrix(const Vec3R& k, const ConnectionParams& params) {
  const Frame f = frame_for(params.gauge, k);
  return std::pow(k.norm(), params.s) * f.E;
}

/// Richardson-extrapolated central difference of a matrix field.
template <typename F>
Mat3C central_diff(const F& field, const Vec3R& k, int l, double h) {
  Vec3R kp = k, km = k;
  kp[l] += h;
  km[l] -= h;
  const Mat3C d1 = (field(kp) - field(km)) / (2.0 * h);
  kp[l] = k[l] + 0.5 * h;
  km[l] = k[l] - 0.5 * h;
  const Mat3C d2 = (field(kp) - field(km)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

Vec3R sigma_coefficient(const Vec3R& k, const Gauge& gauge) {
  gauge.require_in_domain(k);
  const double kn = k.norm();
  Vec3R c = Vec3R::Zero();
  switch (gauge.kind()) {
    case GaugeKind::Spherical: {
      // eps_{lm3} k_m k3 / (|k| (k1^2 + k2^2))
      const double rho2 = k[0] * k[0] + k[1] * k[1];
      c[0] = k[1] * k[2] / (kn * rho2);
      c[1] = -k[0] * k[2] / (kn * rho2);
      break;
    }
    case GaugeKind::StereoSouth: {
      // -eps_{lm3} k_m / (|k| (|k| + k3))
      const double d = kn * (kn + k[2]);
      c[0] = -k[1] / d;
      c[1] = k[0] / d;
      break;
    }
    default: {
      const double d = kn * (kn - k[2]);
      c[0] = k[1] / d;
      c[1] = -k[0] / d;
      if (gauge.kind() == GaugeKind::GeneralRotation) c += gauge.ab_gradient_term(k);
      break;
    }
  }
  return c;
}

GammaMatrices gamma_from_triad_field(const std::function<Mat3C(const Vec3R&)>& triad,
                                     const Vec3R& k, double h) {
  if (h <= 0.0) h = default_fd_step(k);
  const Mat3C m = triad(k);
  auto inv_field = [&triad](const Vec3R& kk) -> Mat3C { return triad(kk).inverse(); };
  GammaMatrices out;
  for (int l = 0; l < 3; ++l) {
    out[l] = m * central_diff(inv_field, k, l, h);
    if (!out[l].allFinite())
      throw std::domain_error("gamma_from_triad_field: non-finite result");
  }
  return out;
}

GammaMatrices gamma_from_frame(const Vec3R& k, const ConnectionParams& params, double h) {
  if (h <= 0.0) h = default_fd_step(k);
  for (int l = 0; l < 3; ++l) {
    Vec3R kp = k, km = k;
    kp[l] += h;
    km[l] -= h;
    params.gauge.require_in_domain(kp);
    params.gauge.require_in_domain(km);
  }
  return gamma_from_triad_field(
      [&params](const Vec3R& kk) { return triad_matrix(kk, params); }, k, h);
}

GammaMatrices gamma_closed_form(const Vec3R& k, const ConnectionParams& params) {
  params.gauge.require_in_domain(k);
  const double kn2 = k.squaredNorm();
  const Vec3R c = sigma_coefficient(k, params.gauge);
  const Mat3C sig = helicity(k);
  const Complex mi(0.0, -1.0);
  GammaMatrices out;
  for (int l = 0; l < 3; ++l) {
    const Mat3C a_l = mi * (k_cross_spin(k, l) / kn2 + c[l] * sig);
    out[l] = -params.s * k[l] / kn2 * Mat3C::Identity() + a_l;
  }
  return out;
}

GammaMatrices gamma_unitary(const Vec3R& k, const ConnectionParams& params) {
  if (params.gauge.kind() != GaugeKind::UnitaryRotation)
    throw std::invalid_argument("gamma_unitary: gauge must be UnitaryRotation");
  params.gauge.require_in_domain(k);
  const Gauge& g = params.gauge;
  const double al = g.fn(0, k);
  const double ps = g.fn(2, k);
  const Vec3R dal = g.fn_grad(0, k), dbe = g.fn_grad(1, k);
  const Vec3R dps = g.fn_grad(2, k), dde = g.fn_grad(3, k);

  const Frame base = frame_stereo_north(k);
  Eigen::Matrix<Complex, 3, 2> eperp;
  eperp.col(0) = base.E.col(0);
  eperp.col(1) = base.E.col(1);
  const Complex i(0.0, 1.0);
  Mat2C sigma_pauli[4];
  sigma_pauli[0] = Mat2C::Identity();
  sigma_pauli[1] << 0, 1, 1, 0;
  sigma_pauli[2] << 0, -i, i, 0;
  sigma_pauli[3] << 1, 0, 0, -1;
  Mat3C r[4];
  for (int j = 0; j < 4; ++j)
    r[j] = eperp * sigma_pauli[j] * eperp.transpose();

  const Vec3R cn = sigma_coefficient(k, Gauge::stereo_north());
  const double kn2 = k.squaredNorm();
  GammaMatrices out;
  for (int l = 0; l < 3; ++l) {
    const double coef0 = dbe[l];
    const double coef1 = -(std::cos(2 * ps) * std::sin(2 * al) * dde[l] -
                           std::sin(2 * ps) * dal[l]);
    const double coef2 = cn[l] + std::sin(2 * ps) * std::sin(2 * al) * dde[l] +
                         std::cos(2 * ps) * dal[l];
    const double coef3 = std::cos(2 * al) * dde[l] + dps[l];
    const Mat3C bracket = k_cross_spin(k, l) / kn2 + coef0 * r[0] + coef1 * r[1] +
                          coef2 * r[2] + coef3 * r[3];
    out[l] = -params.s * k[l] / kn2 * Mat3C::Identity() - i * bracket;
  }
  return out;
}

GammaMatrices gamma_for(const Vec3R& k, const ConnectionParams& params) {
  if (params.gauge.kind() == GaugeKind::UnitaryRotation)
    return gamma_unitary(k, params);
  return gamma_closed_form(k, params);
}

double gamma_coefficient_explicit(const Vec3R& k, double s, const Vec3R& grad_alpha,
                                  int j, int m, int l) {
  const double kn = k.norm();
  const double kn2 = kn * kn;
  double val = s * (j == m) * k[l] - (m == l) * k[j] + (j == l) * k[m];
  for (int r = 0; r < 3; ++r) {
    const double e_rjm = eps3(r, j, m);
    if (e_rjm == 0.0) continue;
    for (int p = 0; p < 3; ++p) {
      const double e_lp3 = eps3(l, p, 2);
      if (e_lp3 != 0.0) val += e_rjm * e_lp3 * k[p] * k[r] / (kn - k[2]);
    }
    val += kn * e_rjm * k[r] * grad_alpha[l];
  }
  return -val / kn2;
}

TorsionTensor torsion(const Vec3R& k, double s, const Gauge& gauge) {
  gauge.require_in_domain(k);
  Vec3R ga = Vec3R::Zero();
  if (gauge.kind() == GaugeKind::GeneralRotation) ga = gauge.fn_grad(0, k);
  else if (gauge.kind() != GaugeKind::StereoNorth)
    throw std::invalid_argument(
        "torsion: explicit coefficients cover stereo-north and general-rotation gauges");
  TorsionTensor q;
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 3; ++m)
      for (int l = 0; l < 3; ++l)
        q(j, m, l) = gamma_coefficient_explicit(k, s, ga, j, m, l) -
                     gamma_coefficient_explicit(k, s, ga, j, l, m);
  return q;
}

double curvature_residual_of(const std::function<GammaMatrices(const Vec3R&)>& gamma_fn,
                             const Vec3R& k, double h) {
  auto comp = [&gamma_fn](const Vec3R& kk, int l) { return gamma_fn(kk)[l]; };
  GammaMatrices g = gamma_fn(k);
  std::array<std::array<Mat3C, 3>, 3> dg;  // dg[l][m] = d_l Gamma_m
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m)
      dg[l][m] = central_diff([&comp, m](const Vec3R& kk) { return comp(kk, m); }, k, l, h);
  double res = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int m = l + 1; m < 3; ++m) {
      const Mat3C r = dg[l][m] - dg[m][l] + g[l] * g[m] - g[m] * g[l];
      res = std::max(res, r.cwiseAbs().maxCoeff());
    }
  return res;
}

double curvature_residual(const Vec3R& k, const ConnectionParams& params, double h) {
  if (h <= 0.0) h = default_fd_step(k);
  for (int l = 0; l < 3; ++l)
    for (double off : {h, -h}) {
      Vec3R kk = k;
      kk[l] += off;
      params.gauge.require_in_domain(kk);
    }
  return curvature_residual_of(
      [&params](const Vec3R& kk) { return gamma_for(kk, params); }, k, h);
}

Vec3C covariant_derivative(const WaveSection& section, const Vec3R& k, int l,
                           const ConnectionParams& params, double h) {
  params.gauge.require_in_domain(k);
  if (h <= 0.0) h = default_fd_step(k);
  const Vec3C dpsi = section_partial(section, k, l, h);
  const GammaMatrices g = gamma_for(k, params);
  return dpsi + g[l] * section.value(k);
}

}  // namespace photonpos
