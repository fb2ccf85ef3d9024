#include "photonpos/position_operator.hpp"

#include <cmath>

#include "photonpos/algebra.hpp"

namespace photonpos {

namespace {
const Complex kI(0.0, 1.0);

WaveSection applied_section(const WaveSection& section,
                            std::function<Vec3C(const WaveSection&, const Vec3R&)> op) {
  WaveSection out;
  out.transverse = section.transverse;
  out.support = section.support;
  out.value = [section, op = std::move(op)](const Vec3R& k) { return op(section, k); };
  return out;
}
}  // namespace

Vec3C apply_position(const WaveSection& section, const Vec3R& k, int l,
                     const ConnectionParams& params, double h) {
  return kI * covariant_derivative(section, k, l, params, h);
}

Vec3C apply_position_compact(const WaveSection& section, const Vec3R& k, int l,
                             const ConnectionParams& params, double h) {
  params.gauge.require_in_domain(k);
  if (h <= 0.0) h = default_fd_step(k);
  auto frame_components = [&](const Vec3R& kk) -> Vec3C {
    const ScaledTriad t = scaled_triad(frame_for(params.gauge, kk), params.s);
    return t.dual * section.value(kk);
  };
  Vec3R kp = k, km = k;
  kp[l] += h;
  km[l] -= h;
  const Vec3C d1 = (frame_components(kp) - frame_components(km)) / (2.0 * h);
  kp[l] = k[l] + 0.5 * h;
  km[l] = k[l] - 0.5 * h;
  const Vec3C d2 = (frame_components(kp) - frame_components(km)) / h;
  const Vec3C df = (4.0 * d2 - d1) / 3.0;
  const ScaledTriad t = scaled_triad(frame_for(params.gauge, k), params.s);
  return kI * (t.e * df);
}

Vec3C commutator_residual(const WaveSection& section, const Vec3R& k, int l, int m,
                          const ConnectionParams& params, double h) {
  if (l == m) return Vec3C::Zero();
  if (h <= 0.0) h = default_fd_step(k);
  const double h_outer = std::sqrt(h) * std::max(1.0, k.norm());
  auto xm = applied_section(section, [m, &params, h](const WaveSection& s, const Vec3R& kk) {
    return apply_position(s, kk, m, params, h);
  });
  auto xl = applied_section(section, [l, &params, h](const WaveSection& s, const Vec3R& kk) {
    return apply_position(s, kk, l, params, h);
  });
  return apply_position(xm, k, l, params, h_outer) -
         apply_position(xl, k, m, params, h_outer);
}

Vec3C pryce_position(const WaveSection& section, const Vec3R& k, int l, double h) {
  if (h <= 0.0) h = default_fd_step(k);
  const double kn2 = k.squaredNorm();
  if (kn2 <= 0.0) throw std::domain_error("pryce_position: zero momentum");
  const Vec3C psi = section.value(k);
  const Vec3C dpsi = section_partial(section, k, l, h);
  return kI * dpsi - kI * k[l] / (2.0 * kn2) * psi + (k_cross_spin(k, l) / kn2) * psi;
}

Vec3C pryce_commutator(const WaveSection& section, const Vec3R& k, int l, int m,
                       double h) {
  if (l == m) return Vec3C::Zero();
  if (h <= 0.0) h = default_fd_step(k);
  const double h_outer = std::sqrt(h) * std::max(1.0, k.norm());
  auto pm = applied_section(section, [m, h](const WaveSection& s, const Vec3R& kk) {
    return pryce_position(s, kk, m, h);
  });
  auto pl = applied_section(section, [l, h](const WaveSection& s, const Vec3R& kk) {
    return pryce_position(s, kk, l, h);
  });
  return pryce_position(pm, k, l, h_outer) - pryce_position(pl, k, m, h_outer);
}

}  // namespace photonpos
