#pragma once

#include <functional>
#include <optional>

#include "photonpos/types.hpp"

namespace photonpos {

/// Axis-aligned box in momentum space (integration support hint).
struct Box3 {
  Vec3R lo = Vec3R::Zero();
  Vec3R hi = Vec3R::Zero();
};

/// Complex 3-vector field over momentum space.  `jacobian`, when present,
/// returns J with J(j, l) = d_l Psi_j.  A section claiming `transverse`
/// satisfies k . Psi(k) = 0 on its support.
struct WaveSection {
  std::function<Vec3C(const Vec3R&)> value;
  std::function<Mat3C(const Vec3R&)> jacobian;  // optional
  bool transverse = false;
  std::optional<Box3> support;  // effective support for quadrature
};

/// Transverse Gaussian bump P(k) v exp(-|k - k0|^2 / w^2) with the
/// analytic Jacobian attached; support box is the 6-sigma neighborhood
/// (sigma = w / sqrt(2)).
WaveSection gaussian_bump(const Vec3R& k0, const Vec3C& v, double w);

/// Jacobian of a section by Richardson-extrapolated central differences.
Mat3C section_jacobian_fd(const WaveSection& s, const Vec3R& k, double h);

/// d_l Psi from the analytic Jacobian when present, else differences.
Vec3C section_partial(const WaveSection& s, const Vec3R& k, int l, double h);

}  // namespace photonpos
