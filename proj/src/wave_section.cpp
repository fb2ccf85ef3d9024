#include "photonpos/wave_section.hpp"

#include <cmath>

#include "photonpos/algebra.hpp"

namespace photonpos {

WaveSection gaussian_bump(const Vec3R& k0, const Vec3C& v, double w) {
  WaveSection s;
  s.transverse = true;
  s.value = [k0, v, w](const Vec3R& k) -> Vec3C {
    const double g = std::exp(-(k - k0).squaredNorm() / (w * w));
    return transverse_projector(k) * v * g;
  };
  s.jacobian = [k0, v, w](const Vec3R& k) -> Mat3C {
    const double g = std::exp(-(k - k0).squaredNorm() / (w * w));
    const double k2 = k.squaredNorm();
    const Vec3C kc = k.cast<Complex>();
    const Complex kv = kc.transpose() * v;  // k . v, no conjugation
    const Vec3C pv = v - kc * kv / k2;
    Mat3C jac;
    for (int l = 0; l < 3; ++l) {
      // (d_l P) v = -(e_l (k.v) + k v_l)/|k|^2 + 2 k_l (k.v) k/|k|^4
      Vec3C dPv = -(Vec3R::Unit(l).cast<Complex>() * kv + kc * v[l]) / k2 +
                  2.0 * k[l] * kv * kc / (k2 * k2);
      jac.col(l) = (dPv - pv * 2.0 * (k[l] - k0[l]) / (w * w)) * g;
    }
    return jac;
  };
  const double sigma = w / std::sqrt(2.0);
  Box3 box;
  box.lo = k0 - Vec3R::Constant(6.0 * sigma);
  box.hi = k0 + Vec3R::Constant(6.0 * sigma);
  s.support = box;
  return s;
}

Mat3C section_jacobian_fd(const WaveSection& s, const Vec3R& k, double h) {
  Mat3C j;
  for (int l = 0; l < 3; ++l) {
    Vec3R kp = k, km = k;
    kp[l] += h;
    km[l] -= h;
    const Vec3C d1 = (s.value(kp) - s.value(km)) / (2.0 * h);
    kp[l] = k[l] + 0.5 * h;
    km[l] = k[l] - 0.5 * h;
    const Vec3C d2 = (s.value(kp) - s.value(km)) / h;
    j.col(l) = (4.0 * d2 - d1) / 3.0;
  }
  return j;
}

Vec3C section_partial(const WaveSection& s, const Vec3R& k, int l, double h) {
  if (s.jacobian) return s.jacobian(k).col(l);
  Vec3R kp = k, km = k;
  kp[l] += h;
  km[l] -= h;
  const Vec3C d1 = (s.value(kp) - s.value(km)) / (2.0 * h);
  kp[l] = k[l] + 0.5 * h;
  km[l] = k[l] - 0.5 * h;
  const Vec3C d2 = (s.value(kp) - s.value(km)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace photonpos
