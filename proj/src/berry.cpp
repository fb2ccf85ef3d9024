#include "photonpos/berry.hpp"

#include <cmath>

#include "photonpos/algebra.hpp"
#include "photonpos/quadrature.hpp"

namespace photonpos {

namespace {
const Complex kI(0.0, 1.0);

constexpr double eps3(int i, int j, int k) {
  return ((i - j) * (j - k) * (k - i)) / 2.0;
}
}  // namespace

LoopSpec LoopSpec::circle(double theta, double radius, const Gauge& gauge, int lambda) {
  if (!(radius > 0.0)) throw std::invalid_argument("LoopSpec::circle: radius > 0");
  LoopSpec c;
  c.k = [theta, radius](double tau) {
    const double phi = 2.0 * M_PI * tau;
    return Vec3R(radius * std::sin(theta) * std::cos(phi),
                 radius * std::sin(theta) * std::sin(phi), radius * std::cos(theta));
  };
  c.dk = [theta, radius](double tau) {
    const double phi = 2.0 * M_PI * tau;
    return Vec3R(-2.0 * M_PI * radius * std::sin(theta) * std::sin(phi),
                 2.0 * M_PI * radius * std::sin(theta) * std::cos(phi), 0.0);
  };
  c.closed = true;
  c.gauge = gauge;
  c.lambda = lambda;
  return c;
}

LoopSpec LoopSpec::polyline(std::vector<Vec3R> nodes, const Gauge& gauge, int lambda) {
  if (nodes.size() < 2) throw std::invalid_argument("LoopSpec::polyline: >= 2 nodes");
  LoopSpec c;
  c.closed = (nodes.front() - nodes.back()).norm() <= 1e-12 * nodes.front().norm();
  c.gauge = gauge;
  c.lambda = lambda;
  c.nodes = std::move(nodes);
  const auto pts = c.nodes;
  const size_t nseg = pts.size() - 1;
  c.k = [pts, nseg](double tau) {
    const double t = std::clamp(tau, 0.0, 1.0) * nseg;
    const size_t i = std::min(static_cast<size_t>(t), nseg - 1);
    const double f = t - i;
    return Vec3R((1.0 - f) * pts[i] + f * pts[i + 1]);
  };
  c.dk = [pts, nseg](double tau) {
    const double t = std::clamp(tau, 0.0, 1.0) * nseg;
    const size_t i = std::min(static_cast<size_t>(t), nseg - 1);
    return Vec3R((pts[i + 1] - pts[i]) * static_cast<double>(nseg));
  };
  return c;
}

Vec3R LoopSpec::point(double tau) const { return k(tau); }

Vec3R LoopSpec::velocity(double tau) const {
  if (dk) return dk(tau);
  const double h = 1e-6 * std::max(1.0, std::abs(tau1 - tau0));
  const Vec3R d1 = (k(tau + h) - k(tau - h)) / (2.0 * h);
  const Vec3R d2 = (k(tau + 0.5 * h) - k(tau - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

void LoopSpec::require_valid(int samples) const {
  if (closed) {
    const Vec3R a = k(tau0), b = k(tau1);
    if ((a - b).norm() > 1e-12 * std::max(1.0, a.norm()))
      throw std::invalid_argument("LoopSpec: closed flag set but endpoints differ");
  }
  for (int i = 0; i <= samples; ++i) {
    const double tau = tau0 + (tau1 - tau0) * i / samples;
    const Vec3R p = k(tau);
    if (!gauge.in_domain(p, kLoopCutMargin))
      throw std::domain_error("LoopSpec: curve approaches the cut of gauge " +
                              gauge.name());
  }
}

Vec3R berry_potential(const Vec3R& k, int lambda, const Gauge& gauge) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("berry_potential: lambda must be +1 or -1");
  return -static_cast<double>(lambda) * sigma_coefficient(k, gauge);
}

namespace {

/// Scalar transport coefficient w(tau) = c_l(k(tau)) dk_l/dtau so that
/// d Psi/d tau = -i lambda w Psi.
double transport_coefficient(const LoopSpec& curve, double tau) {
  return sigma_coefficient(curve.point(tau), curve.gauge).dot(curve.velocity(tau));
}

}  // namespace

TransportResult transport(const LoopSpec& curve, const Vec3C& psi0, double rel_tol) {
  curve.require_valid();
  const Vec3R k0 = curve.point(curve.tau0);
  const Mat3C sig0 = helicity(k0);
  const double lam = curve.lambda;
  if ((sig0 * psi0 - lam * psi0).norm() > 1e-8 * psi0.norm())
    throw std::invalid_argument("transport: psi0 is not a helicity eigenvector at k(tau0)");

  // Dormand-Prince 5(4) on the state (Re psi, Im psi, phase).
  auto rhs = [&](double tau, const Eigen::Matrix<double, 7, 1>& y) {
    const double w = transport_coefficient(curve, tau);
    Eigen::Matrix<double, 7, 1> dy;
    // psi' = -i lam w psi: (re + i im)' = -i lam w (re + i im)
    for (int j = 0; j < 3; ++j) {
      dy[j] = lam * w * y[j + 3];
      dy[j + 3] = -lam * w * y[j];
    }
    dy[6] = -lam * w;
    return dy;
  };
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                      a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  Eigen::Matrix<double, 7, 1> y;
  y << psi0.real(), psi0.imag(), 0.0;
  double tau = curve.tau0;
  double h = (curve.tau1 - curve.tau0) / 64.0;
  const double hmin = (curve.tau1 - curve.tau0) * 1e-14;
  TransportResult res;
  while (tau < curve.tau1) {
    if (tau + h > curve.tau1) h = curve.tau1 - tau;
    const auto k1 = rhs(tau, y);
    const auto k2 = rhs(tau + h * a21, y + h * a21 * k1);
    const auto k3 = rhs(tau + 0.3 * h, y + h * (a31 * k1 + a32 * k2));
    const auto k4 = rhs(tau + 0.8 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const auto k5 =
        rhs(tau + 8.0 / 9.0 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const auto k6 =
        rhs(tau + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::Matrix<double, 7, 1> ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const auto k7 = rhs(tau + h, ynew);
    const Eigen::Matrix<double, 7, 1> errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double sc = rel_tol * std::max(1.0, ynew.norm());
    const double err = errv.norm() / sc;
    if (err <= 1.0) {
      tau += h;
      y = ynew;
      ++res.steps;
      const Vec3C psi(Complex(y[0], y[3]), Complex(y[1], y[4]), Complex(y[2], y[5]));
      const Mat3C sig = helicity(curve.point(tau));
      res.max_drift =
          std::max(res.max_drift, (sig * psi - lam * psi).norm() / psi.norm());
    }
    h *= std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    if (h < hmin) throw std::runtime_error("transport: step-size underflow near the cut");
  }
  res.psi = Vec3C(Complex(y[0], y[3]), Complex(y[1], y[4]), Complex(y[2], y[5]));
  res.phase = y[6];
  return res;
}

double berry_line_integral(const LoopSpec& curve) {
  curve.require_valid();
  auto a_dot = [&curve](double tau) {
    return berry_potential(curve.point(tau), curve.lambda, curve.gauge)
        .dot(curve.velocity(tau));
  };
  std::vector<double> x, w;
  gauss_legendre(16, x, w);
  if (!curve.nodes.empty()) {
    // per-segment Gauss-Legendre order 16
    const size_t nseg = curve.nodes.size() - 1;
    double total = 0.0;
    for (size_t sgi = 0; sgi < nseg; ++sgi) {
      const double t0 = static_cast<double>(sgi) / nseg;
      const double t1 = static_cast<double>(sgi + 1) / nseg;
      for (int i = 0; i < 16; ++i) {
        const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * x[i];
        total += 0.5 * (t1 - t0) * w[i] * a_dot(t);
      }
    }
    return total;
  }
  // parametric curve: panel count doubling until two estimates agree
  double prev = 0.0;
  bool have = false;
  for (int panels = 4; panels <= 4096; panels *= 2) {
    double total = 0.0;
    for (int s = 0; s < panels; ++s) {
      const double t0 = curve.tau0 + (curve.tau1 - curve.tau0) * s / panels;
      const double t1 = curve.tau0 + (curve.tau1 - curve.tau0) * (s + 1) / panels;
      for (int i = 0; i < 16; ++i) {
        const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * x[i];
        total += 0.5 * (t1 - t0) * w[i] * a_dot(t);
      }
    }
    if (have && std::abs(total - prev) <= 1e-11 * std::max(1.0, std::abs(total)))
      return total;
    prev = total;
    have = true;
  }
  return prev;
}

double berry_phase_integral(const LoopSpec& curve) {
  if (!curve.closed) throw std::invalid_argument("berry_phase_integral: curve must be closed");
  return berry_line_integral(curve);
}

double berry_phase_closed(double theta, int lambda, int which) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("berry_phase_closed: lambda must be +1 or -1");
  const bool theta_ok = which == 1 ? (theta > 0.0 && theta <= M_PI)
                                   : (theta > 0.0 && theta < M_PI);
  if (!theta_ok) throw std::domain_error("berry_phase_closed: theta out of range");
  switch (which) {
    case 1:
      return lambda * 2.0 * M_PI * (std::cos(theta) + 1.0);
    case 2:
      return lambda * 2.0 * M_PI * std::cos(theta);
    case 3:
      return lambda * 2.0 * M_PI * (std::cos(theta) - 1.0);
    default:
      throw std::invalid_argument("berry_phase_closed: which must be 1, 2 or 3");
  }
}

Mat3C dprime_curvature(const Vec3R& k, int l, int m, const Gauge& gauge) {
  gauge.require_in_domain(k);
  if (l == m) return Mat3C::Zero();
  const double kn = k.norm();
  const Vec3R c = sigma_coefficient(k, gauge);
  static const auto s = spin_matrices();
  Mat3C out = Mat3C::Zero();
  for (int r = 0; r < 3; ++r) {
    const double e = eps3(l, m, r);
    if (e != 0.0) out += kI * e * k[r] / (kn * kn * kn) * helicity(k);
  }
  Mat3C sl = Mat3C::Zero(), sm = Mat3C::Zero();
  for (int j = 0; j < 3; ++j) {
    sl += (((l == j) ? 1.0 : 0.0) - k[l] * k[j] / (kn * kn)) / kn * s[j];
    sm += (((m == j) ? 1.0 : 0.0) - k[m] * k[j] / (kn * kn)) / kn * s[j];
  }
  out += kI * c[m] * sl - kI * c[l] * sm;
  return out;
}

Vec3C dprime_apply(const WaveSection& s, const Vec3R& k, int l, const Gauge& gauge,
                   double h) {
  gauge.require_in_domain(k);
  if (h <= 0.0) h = default_fd_step(k);
  const Vec3C dpsi = section_partial(s, k, l, h);
  return dpsi + kI * sigma_coefficient(k, gauge)[l] * (helicity(k) * s.value(k));
}

}  // namespace photonpos
