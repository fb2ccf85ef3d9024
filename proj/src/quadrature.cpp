#include "photonpos/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace photonpos {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  // Newton iteration on Legendre polynomials; cached per order.
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        const double dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      const double dp = n * (z * p0 - p1) / (z * z - 1.0);
      xs[i] = z;
      ws[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    it = cache.emplace(n, std::make_pair(std::move(xs), std::move(ws))).first;
  }
  x = it->second.first;
  w = it->second.second;
}

namespace {

Complex box_rule(const std::function<Complex(const Vec3R&)>& f, const Box3& b, int order,
                 long& evals) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  const Vec3R mid = 0.5 * (b.lo + b.hi);
  const Vec3R half = 0.5 * (b.hi - b.lo);
  Complex sum(0.0, 0.0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k) {
        const Vec3R p(mid[0] + half[0] * x[i], mid[1] + half[1] * x[j],
                      mid[2] + half[2] * x[k]);
        sum += w[i] * w[j] * w[k] * f(p);
      }
  evals += static_cast<long>(order) * order * order;
  return sum * half.prod();
}

struct BoxEntry {
  Box3 box;
  Complex value;
  double error;
  long seq;
  bool operator<(const BoxEntry& o) const {
    if (error != o.error) return error < o.error;
    return seq > o.seq;  // older first on ties, keeps the queue deterministic
  }
};

}  // namespace

QuadResult integrate_box(const std::function<Complex(const Vec3R&)>& f, const Box3& box,
                         const QuadratureSpec& spec) {
  QuadResult res;
  long seq = 0;
  auto evaluate = [&](const Box3& b) {
    BoxEntry e;
    e.box = b;
    const Complex lo = box_rule(f, b, 4, res.evals);
    e.value = box_rule(f, b, 7, res.evals);
    e.error = std::abs(e.value - lo);
    e.seq = seq++;
    return e;
  };
  std::priority_queue<BoxEntry> q;
  q.push(evaluate(box));
  Complex total = q.top().value;
  double total_err = q.top().error;
  while (res.evals < spec.max_evals) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    BoxEntry worst = q.top();
    q.pop();
    int axis = 0;
    const Vec3R len = worst.box.hi - worst.box.lo;
    if (len[1] > len[axis]) axis = 1;
    if (len[2] > len[axis]) axis = 2;
    Box3 a = worst.box, b = worst.box;
    const double mid = 0.5 * (worst.box.lo[axis] + worst.box.hi[axis]);
    a.hi[axis] = mid;
    b.lo[axis] = mid;
    const BoxEntry ea = evaluate(a), eb = evaluate(b);
    total += ea.value + eb.value - worst.value;
    total_err += ea.error + eb.error - worst.error;
    q.push(ea);
    q.push(eb);
  }
  res.value = total;
  res.error = total_err;
  res.converged = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  return res;
}

QuadResult integrate_spherical(const std::function<Complex(const Vec3R&)>& f, double r0,
                               double r1, const QuadratureSpec& spec) {
  QuadResult res;
  Complex prev(0.0, 0.0);
  bool have_prev = false;
  for (int order : {8, 12, 16, 24, 32, 48, 64, 96}) {
    std::vector<double> xr, wr, xu, wu;
    gauss_legendre(order, xr, wr);
    gauss_legendre(order, xu, wu);
    const int nphi = 2 * order;
    const double dphi = 2.0 * M_PI / nphi;
    Complex sum(0.0, 0.0);
    for (int i = 0; i < order; ++i) {
      const double r = 0.5 * (r0 + r1) + 0.5 * (r1 - r0) * xr[i];
      for (int j = 0; j < order; ++j) {
        const double u = xu[j];  // cos(theta)
        const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int m = 0; m < nphi; ++m) {
          const double phi = dphi * m;
          const Vec3R p(r * st * std::cos(phi), r * st * std::sin(phi), r * u);
          sum += wr[i] * wu[j] * dphi * r * r * f(p);
        }
      }
    }
    sum *= 0.5 * (r1 - r0);
    res.evals += static_cast<long>(order) * order * nphi;
    if (have_prev) {
      res.error = std::abs(sum - prev);
      if (res.error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum))) {
        res.value = sum;
        res.converged = true;
        return res;
      }
    }
    prev = sum;
    have_prev = true;
    if (res.evals > spec.max_evals) break;
  }
  res.value = prev;
  res.converged = false;
  return res;
}

}  // namespace photonpos
