#pragma once

#include <functional>
#include <vector>

#include "photonpos/wave_section.hpp"

namespace photonpos {

/// Quadrature configuration: adaptive subdivision over a bounding box, or a
/// product Gauss rule in spherical coordinates for radially-aligned
/// integrands.
struct QuadratureSpec {
  enum class Scheme { AdaptiveBox, SphericalProduct };
  Scheme scheme = Scheme::AdaptiveBox;
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  long max_evals = 4'000'000;

  QuadratureSpec() = default;
  QuadratureSpec(Scheme sc, double rel, double abs = 0.0, long maxev = 4'000'000)
      : scheme(sc), rel_tol(rel), abs_tol(abs), max_evals(maxev) {
    if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
      throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
  }
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double error = 0.0;
  long evals = 0;
  bool converged = false;
};

/// Adaptive box integration: per-box tensor Gauss-Legendre with an embedded
/// lower-order estimate, refining the worst box by bisection along its
/// longest edge.  Deterministic for a fixed integrand.
QuadResult integrate_box(const std::function<Complex(const Vec3R&)>& f, const Box3& box,
                         const QuadratureSpec& spec);

/// Product rule in spherical coordinates on [r0, r1] x S^2, escalating
/// orders until two successive estimates agree within tolerance.
QuadResult integrate_spherical(const std::function<Complex(const Vec3R&)>& f, double r0,
                               double r1, const QuadratureSpec& spec);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace photonpos
