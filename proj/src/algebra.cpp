#include "photonpos/algebra.hpp"

namespace photonpos {

namespace {
constexpr double eps3(int i, int j, int k) {
  return ((i - j) * (j - k) * (k - i)) / 2.0;  // Levi-Civita for 0-based indices
}
}  // namespace

std::array<Mat3C, 3> spin_matrices() {
  const Complex mi(0.0, -1.0);
  std::array<Mat3C, 3> s;
  for (int j = 0; j < 3; ++j) {
    s[j].setZero();
    for (int r = 0; r < 3; ++r)
      for (int l = 0; l < 3; ++l) s[j](r, l) = mi * eps3(j, r, l);
  }
  return s;
}

Mat3C helicity(const Vec3R& k) {
  const double kn = k.norm();
  if (kn <= 0.0) throw std::domain_error("helicity: zero momentum");
  static const std::array<Mat3C, 3> s = spin_matrices();
  return (k[0] * s[0] + k[1] * s[1] + k[2] * s[2]) / kn;
}

Mat3C transverse_projector(const Vec3R& k) {
  const double k2 = k.squaredNorm();
  if (k2 <= 0.0) throw std::domain_error("transverse_projector: zero momentum");
  return Mat3C(Mat3R(Mat3R::Identity() - k * k.transpose() / k2));
}

Mat3C k_cross_spin(const Vec3R& k, int l) {
  static const std::array<Mat3C, 3> s = spin_matrices();
  Mat3C out = Mat3C::Zero();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double e = eps3(l, a, b);
      if (e != 0.0) out += e * k[a] * s[b];
    }
  return out;
}

}  // namespace photonpos
