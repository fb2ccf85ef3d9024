#include "photonpos/eigenstates.hpp"

#include <cmath>
#include <queue>

#include "photonpos/algebra.hpp"

namespace photonpos {

namespace {
const Complex kI(0.0, 1.0);
constexpr double kTwoPiCubed = 8.0 * M_PI * M_PI * M_PI;
}  // namespace

WaveSection eigenfunction_momentum(const EigenParams& p) {
  WaveSection s;
  s.transverse = true;
  const EigenParams par = p;
  s.value = [par](const Vec3R& k) -> Vec3C {
    const Frame f = frame_for(par.gauge, k);
    const Vec3C pol = par.c1 * f.E.col(0) + par.c2 * f.E.col(1);
    return pol * std::exp(-kI * Complex(k.dot(par.X), 0.0)) * std::pow(k.norm(), par.s);
  };
  s.jacobian = [par](const Vec3R& k) -> Mat3C {
    const Frame f = frame_for(par.gauge, k);
    const Vec3C pol = par.c1 * f.E.col(0) + par.c2 * f.E.col(1);
    const Vec3C psi =
        pol * std::exp(-kI * Complex(k.dot(par.X), 0.0)) * std::pow(k.norm(), par.s);
    const ConnectionParams cp{par.s, par.gauge};
    const GammaMatrices g = gamma_for(k, cp);
    const double kn2 = k.squaredNorm();
    Mat3C jac;
    for (int l = 0; l < 3; ++l) {
      // d_l Psi = (-A_l + (s k_l/|k|^2 - i X_l) 1) Psi with A_l = Gamma_l + s k_l/|k|^2 1
      const Mat3C a_l = g[l] + par.s * k[l] / kn2 * Mat3C::Identity();
      jac.col(l) = -a_l * psi + (par.s * k[l] / kn2 - kI * par.X[l]) * psi;
    }
    return jac;
  };
  return s;
}

WaveSection helicity_eigenstate(const Vec3R& X, int lambda, double s, const Gauge& gauge) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("helicity_eigenstate: lambda must be +1 or -1");
  EigenParams p;
  p.X = X;
  p.c1 = Complex(1.0 / std::sqrt(2.0), 0.0);
  p.c2 = Complex(0.0, lambda / std::sqrt(2.0));
  p.s = s;
  p.gauge = gauge;
  return eigenfunction_momentum(p);
}

Complex normalization_integrand(const EigenParams& p, const EigenParams& p2,
                                const Vec3R& k) {
  if (p.gauge.kind() != p2.gauge.kind())
    throw std::invalid_argument("normalization_integrand: gauges must match");
  if (p.s != 0.5 || p2.s != 0.5)
    throw std::invalid_argument("normalization_integrand: defined for s = 1/2");
  const WaveSection a = eigenfunction_momentum(p);
  const WaveSection b = eigenfunction_momentum(p2);
  return a.value(k).dot(b.value(k)) / (kTwoPiCubed * k.norm());
}

double kmax_for_tail(double eps, double s, double target) {
  if (!(eps > 0.0) || !(target > 0.0))
    throw std::invalid_argument("kmax_for_tail: eps and target must be positive");
  auto bound = [eps, s](double kmax) {
    const double denom = eps - (2.0 + s) / kmax;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(kmax, 2.0 + s) * std::exp(-eps * kmax) / denom;
  };
  double hi = (2.0 + s + 1.0) / eps;
  while (bound(hi) > target) hi *= 2.0;
  double lo = hi / 2.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

double tail_bound_abs(double eps, double s, double kmax, double amplitude,
                      const Constants& constants) {
  const double denom = eps - (2.0 + s) / kmax;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  const double tail = std::pow(kmax, 2.0 + s) * std::exp(-eps * kmax) / denom;
  return std::sqrt(constants.hbar * constants.c) * 4.0 * M_PI * amplitude * tail /
         kTwoPiCubed;
}

namespace {

/// Radial factor int_0^kmax k^{2+s} e^{(iA - eps)k} dk by panel-wise
/// Gauss-Legendre, panels sized to the oscillation period 2 pi / |A|.
/// The exponential at node k = p dk + t_i is exp(lam dk)^p exp(lam t_i),
/// one complex multiply per panel instead of an exp per node.
Complex radial_integral(double A, double eps, double kmax, double s, long& evals) {
  static thread_local std::vector<double> x, w;
  gauss_legendre(10, x, w);
  const double scale = std::abs(A) + eps;
  long panels = static_cast<long>(std::ceil(kmax * scale / (2.0 * M_PI))) + 4;
  panels = std::min<long>(panels, 400000);
  const double dk = kmax / static_cast<double>(panels);
  const Complex lam(-eps, A);
  const Complex step = std::exp(lam * dk);
  Complex node_factor[10];
  double node_off[10];
  for (int i = 0; i < 10; ++i) {
    node_off[i] = 0.5 * dk * (1.0 + x[i]);
    node_factor[i] = std::exp(lam * node_off[i]);
  }
  const bool half = (s == 0.5);
  Complex carrier(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (long p = 0; p < panels; ++p) {
    const double base = p * dk;
    Complex panel(0.0, 0.0);
    for (int i = 0; i < 10; ++i) {
      const double k = base + node_off[i];
      const double kp = half ? k * k * std::sqrt(k) : std::pow(k, 2.0 + s);
      panel += (w[i] * kp) * node_factor[i];
    }
    sum += panel * carrier;
    carrier *= step;
  }
  evals += panels * 10;
  return sum * (0.5 * dk);
}

struct Cell {
  double u0, u1, p0, p1;
  Vec3C value;
  double error;
  double err_u;
  double err_p;
  long seq;
  bool operator<(const Cell& o) const {
    if (error != o.error) return error < o.error;
    return seq > o.seq;
  }
};

}  // namespace

PositionWavefunctionResult position_wavefunction_numeric(
    const EigenParams& p, const Vec3R& x, double eps, double kmax,
    const QuadratureSpec& q, const Constants& constants) {
  if (!(eps > 0.0)) throw std::invalid_argument("position_wavefunction_numeric: eps > 0");
  if (!(kmax > 0.0)) throw std::invalid_argument("position_wavefunction_numeric: kmax > 0");
  const Vec3R r = x - p.X;

  // Angular chart with the pole along r, so the stationary circle
  // k.r = 0 sits on the equator u = 0 and stays axis-aligned for the
  // adaptive subdivision.
  const double rn = r.norm();
  Vec3R axis = rn > 0.0 ? Vec3R(r / rn) : Vec3R(0, 0, 1);
  Vec3R seed = std::abs(axis[2]) < 0.9 ? Vec3R(0, 0, 1) : Vec3R(1, 0, 0);
  const Vec3R ea = axis.cross(seed).normalized();
  const Vec3R eb = axis.cross(ea);

  PositionWavefunctionResult res;
  // The radial factor depends on u alone, so each cell needs only 8 + 4
  // radial integrals; the u- and phi-direction quadrature errors are
  // estimated separately to steer the split (the stationary strip u ~ 0
  // is narrow in u but featureless along phi).
  auto pol_at = [&](double u, double phi) -> Vec3C {
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    const Vec3R khat = st * (std::cos(phi) * ea + std::sin(phi) * eb) + u * axis;
    if (!p.gauge.in_domain(khat)) return Vec3C::Zero();  // measure-zero cut tube
    const Frame f = frame_for(p.gauge, khat);
    return p.c1 * f.E.col(0) + p.c2 * f.E.col(1);
  };
  auto eval_cell = [&](double u0, double u1, double p0, double p1, long seq) -> Cell {
    static thread_local std::vector<double> x8, w8, x4, w4;
    gauss_legendre(8, x8, w8);
    gauss_legendre(4, x4, w4);
    const double um = 0.5 * (u0 + u1), uh = 0.5 * (u1 - u0);
    const double pm = 0.5 * (p0 + p1), phh = 0.5 * (p1 - p0);
    Complex rad8[8], rad4[4];
    for (int i = 0; i < 8; ++i)
      rad8[i] = radial_integral(rn * (um + uh * x8[i]), eps, kmax, p.s, res.evals);
    for (int i = 0; i < 4; ++i)
      rad4[i] = radial_integral(rn * (um + uh * x4[i]), eps, kmax, p.s, res.evals);
    Vec3C v88 = Vec3C::Zero(), v48 = Vec3C::Zero(), v84 = Vec3C::Zero();
    for (int j = 0; j < 8; ++j) {
      const double phi = pm + phh * x8[j];
      for (int i = 0; i < 8; ++i)
        v88 += (w8[i] * w8[j]) * (pol_at(um + uh * x8[i], phi) * rad8[i]);
      for (int i = 0; i < 4; ++i)
        v48 += (w4[i] * w8[j]) * (pol_at(um + uh * x4[i], phi) * rad4[i]);
    }
    for (int j = 0; j < 4; ++j) {
      const double phi = pm + phh * x4[j];
      for (int i = 0; i < 8; ++i)
        v84 += (w8[i] * w4[j]) * (pol_at(um + uh * x8[i], phi) * rad8[i]);
    }
    const double jac = uh * phh;
    Cell c{u0, u1, p0, p1, jac * v88, 0.0, 0.0, 0.0, seq};
    c.err_u = jac * (v88 - v48).cwiseAbs().maxCoeff();
    c.err_p = jac * (v88 - v84).cwiseAbs().maxCoeff();
    c.error = c.err_u + c.err_p;
    ++res.cells;
    return c;
  };

  long seq = 0;
  std::priority_queue<Cell> heap;
  Vec3C total = Vec3C::Zero();
  double total_err = 0.0;
  // initial 4 x 8 grid keeps the A = 0 circle from hiding inside one cell
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) {
      Cell c = eval_cell(-1.0 + 0.5 * i, -1.0 + 0.5 * (i + 1), 2.0 * M_PI * j / 8.0,
                         2.0 * M_PI * (j + 1) / 8.0, seq++);
      total += c.value;
      total_err += c.error;
      heap.push(c);
    }
  while (res.evals < q.max_evals) {
    const double tol = std::max(q.abs_tol, q.rel_tol * total.norm());
    if (total_err <= tol) break;
    Cell worst = heap.top();
    heap.pop();
    Cell a = worst, b = worst;
    if (worst.err_u >= worst.err_p) {
      const double mid = 0.5 * (worst.u0 + worst.u1);
      a = eval_cell(worst.u0, mid, worst.p0, worst.p1, seq++);
      b = eval_cell(mid, worst.u1, worst.p0, worst.p1, seq++);
    } else {
      const double mid = 0.5 * (worst.p0 + worst.p1);
      a = eval_cell(worst.u0, worst.u1, worst.p0, mid, seq++);
      b = eval_cell(worst.u0, worst.u1, mid, worst.p1, seq++);
    }
    total += a.value + b.value - worst.value;
    total_err += a.error + b.error - worst.error;
    heap.push(a);
    heap.push(b);
  }

  const double pref = std::sqrt(constants.hbar * constants.c) / kTwoPiCubed;
  res.value = pref * total;
  res.angular_error = pref * total_err;
  res.converged = total_err <= std::max(q.abs_tol, q.rel_tol * total.norm());
  res.tail_bound =
      tail_bound_abs(eps, p.s, kmax, std::abs(p.c1) + std::abs(p.c2), constants);
  return res;
}

ExtrapolationResult epsilon_extrapolate(const std::vector<double>& eps,
                                        const std::vector<Vec3C>& values) {
  if (eps.size() < 3 || eps.size() != values.size())
    throw std::invalid_argument("epsilon_extrapolate: need >= 3 matching levels");
  const size_t n = eps.size();
  std::vector<Vec3C> t(values);
  std::vector<Vec3C> tops;  // top-of-table extrapolant at each order
  for (size_t m = 1; m < n; ++m) {
    for (size_t i = 0; i + m < n; ++i)
      t[i] = t[i + 1] + (t[i + 1] - t[i]) * (eps[i + m] / (eps[i] - eps[i + m]));
    tops.push_back(t[0]);
  }
  ExtrapolationResult r;
  r.limit = tops.back();
  const size_t nt = tops.size();
  r.error_estimate = nt >= 2 ? (tops[nt - 1] - tops[nt - 2]).norm()
                             : (tops[0] - values.back()).norm();
  if (nt >= 3) {
    const double prev = (tops[nt - 2] - tops[nt - 3]).norm();
    r.diverged = prev > 0.0 && r.error_estimate > 4.0 * prev;
  }
  return r;
}

ClosedFormPoint closed_form_point(const Vec3R& x, const Vec3R& X) {
  const Vec3R r = x - X;
  ClosedFormPoint cf;
  cf.X = r.norm();
  if (!(cf.X > 0.0))
    throw std::domain_error("closed_form_point: x = X is outside the stated domain");
  cf.theta1 = std::atan2(std::hypot(r[0], r[1]), r[2]);
  cf.phi1 = (std::hypot(r[0], r[1]) == 0.0) ? 0.0 : std::atan2(r[1], r[0]);
  return cf;
}

std::array<Complex, 5> closed_form_profiles(const ClosedFormPoint& cf,
                                            const Constants& constants) {
  if (!(cf.X > 0.0))
    throw std::domain_error("closed-form profiles: require |x - X| > 0");
  const double c = std::cos(cf.theta1);
  const double s2 = std::sin(cf.theta1) * std::sin(cf.theta1);
  if (std::abs(c) < 1e-12)
    throw std::domain_error(
        "closed-form profiles: theta1 = pi/2 excluded (valid only as a distribution)");
  const double pre =
      std::sqrt(constants.hbar * constants.c) /
      (8.0 * std::sqrt(2.0) * std::pow(M_PI, 1.5) * std::pow(cf.X, 3.5));
  const double sg = (c > 0.0) ? 1.0 : -1.0;
  const Complex one_isg(1.0, -sg);
  const double c2p = std::cos(2.0 * cf.phi1), s2p = std::sin(2.0 * cf.phi1);
  const double cp2 = std::cos(cf.phi1) * std::cos(cf.phi1);
  const double sp2 = std::sin(cf.phi1) * std::sin(cf.phi1);
  std::array<Complex, 5> f;
  if (s2 < 1e-18) {
    // poles theta1 in {0, pi}: the cos(2 phi1) harmonic cancels and only
    // the phi1-independent part survives
    f[0] = pre * 0.5 * (Complex(3.0, 0.0) + Complex(0.0, 5.0) * c);
    f[1] = Complex(0.0, 0.0);
  } else {
    const Complex g =
        (2.0 * kI * c - 2.0 + 2.0 * one_isg / std::pow(std::abs(c), 1.5)) / s2;
    f[0] = pre * (g * c2p + 3.0 * sp2 + Complex(0.0, 5.0) * c * cp2);
    const Complex bracket = Complex(11.0 / 8.0, 0.0) - Complex(0.0, 21.0 / 16.0) * c -
                            3.0 * std::cos(2.0 * cf.theta1) / 8.0 +
                            Complex(0.0, 5.0 / 16.0) * std::cos(3.0 * cf.theta1) -
                            one_isg / std::pow(std::abs(c), 1.5);
    f[1] = 2.0 * pre * s2p * bracket / s2;
  }
  f[2] = pre * Complex(-3.0, -5.0 * c);
  f[3] = pre * Complex(0.0, -5.0) * std::sin(cf.theta1) * std::cos(cf.phi1);
  f[4] = pre * Complex(0.0, 5.0) * std::sin(cf.theta1) * std::sin(cf.phi1);
  return f;
}

Vec3C position_wavefunction_closed(const ClosedFormPoint& cf, Complex c1, Complex c2,
                                   const Constants& constants) {
  const auto f = closed_form_profiles(cf, constants);
  return Vec3C(c1 * f[0] + c2 * f[1], -c1 * f[1] + c2 * (f[0] + f[2]),
               c1 * f[3] + c2 * f[4]);
}

double energy_density(const ClosedFormPoint& cf, Complex c1, Complex c2,
                      const Constants& constants) {
  return position_wavefunction_closed(cf, c1, c2, constants).squaredNorm();
}

}  // namespace photonpos
