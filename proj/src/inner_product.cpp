#include "photonpos/inner_product.hpp"

#include <cmath>

namespace photonpos {

namespace {

Box3 support_intersection(const WaveSection& phi, const WaveSection& psi) {
  if (!phi.support && !psi.support)
    throw std::invalid_argument("inner product: no support box on either section");
  if (!phi.support) return *psi.support;
  if (!psi.support) return *phi.support;
  Box3 b;
  b.lo = phi.support->lo.cwiseMax(psi.support->lo);
  b.hi = phi.support->hi.cwiseMin(psi.support->hi);
  return b;
}

constexpr double kTwoPiCubed = 8.0 * M_PI * M_PI * M_PI;

}  // namespace

QuadResult weighted_inner(const WaveSection& phi, const WaveSection& psi, double s,
                          const QuadratureSpec& q) {
  const Box3 box = support_intersection(phi, psi);
  if ((box.hi - box.lo).minCoeff() <= 0.0) return QuadResult{{0.0, 0.0}, 0.0, 0, true};
  auto f = [&phi, &psi, s](const Vec3R& k) -> Complex {
    const double kn = k.norm();
    if (kn <= 0.0) return Complex(0.0, 0.0);
    return phi.value(k).dot(psi.value(k)) * std::pow(kn, -2.0 * s) / kTwoPiCubed;
  };
  return integrate_box(f, box, q);
}

QuadResult bb_inner(const WaveSection& phi, const WaveSection& psi,
                    const QuadratureSpec& q) {
  return weighted_inner(phi, psi, 0.5, q);
}

Complex antihermiticity_residual(const WaveSection& phi, const WaveSection& psi, int l,
                                 const ConnectionParams& params, double weight_s,
                                 const QuadratureSpec& q) {
  const Box3 box = support_intersection(phi, psi);
  if ((box.hi - box.lo).minCoeff() <= 0.0) return Complex(0.0, 0.0);
  auto d_of = [&params, l](const WaveSection& s, const Vec3R& k) {
    return covariant_derivative(s, k, l, params);
  };
  auto f1 = [&](const Vec3R& k) -> Complex {
    const double kn = k.norm();
    if (kn <= 0.0) return {0.0, 0.0};
    return phi.value(k).dot(d_of(psi, k)) * std::pow(kn, -2.0 * weight_s) / kTwoPiCubed;
  };
  auto f2 = [&](const Vec3R& k) -> Complex {
    const double kn = k.norm();
    if (kn <= 0.0) return {0.0, 0.0};
    return psi.value(k).dot(d_of(phi, k)) * std::pow(kn, -2.0 * weight_s) / kTwoPiCubed;
  };
  const Complex a = integrate_box(f1, box, q).value;
  const Complex b = integrate_box(f2, box, q).value;
  return std::conj(a) + b;
}

Complex antihermiticity_residual(const WaveSection& phi, const WaveSection& psi, int l,
                                 const ConnectionParams& params,
                                 const QuadratureSpec& q) {
  return antihermiticity_residual(phi, psi, l, params, params.s, q);
}

}  // namespace photonpos
