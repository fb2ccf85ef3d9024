#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "photonpos/algebra.hpp"
#include "photonpos/eigenstates.hpp"
#include "photonpos/position_operator.hpp"

using namespace photonpos;

namespace {
WaveSection random_bump(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Vec3R k0 = oracle::random_domain_point(rng);
  const Vec3C v = oracle::random_complex_vec(rng);
  return gaussian_bump(k0, v, 0.5 + u(rng));
}
}  // namespace

TEST_CASE("eigen-sections satisfy the eigen-relation") {
  std::mt19937_64 rng(201);
  for (const Gauge& g : oracle::kGauges)
    for (double s : {0.0, 0.5, 1.0}) {
      EigenParams p;
      p.X = Vec3R(0.4, -0.8, 1.1);
      p.c1 = Complex(0.6, 0.1);
      p.c2 = Complex(-0.2, 0.77);
      p.s = s;
      p.gauge = g;
      const WaveSection psi = eigenfunction_momentum(p);
      for (int t = 0; t < 10; ++t) {
        const Vec3R k = oracle::random_domain_point(rng);
        for (int l = 0; l < 3; ++l) {
          const Vec3C lhs = apply_position(psi, k, l, {s, g});
          const Vec3C rhs = p.X[l] * psi.value(k);
          CHECK((lhs - rhs).norm() < 1e-8 * std::max(1.0, rhs.norm()));
        }
      }
    }
}

TEST_CASE("transversality is preserved; the naive operator breaks it") {
  std::mt19937_64 rng(202);
  const ConnectionParams params{0.5, Gauge::stereo_north()};
  for (int t = 0; t < 25; ++t) {
    const WaveSection psi = random_bump(rng);
    const Vec3R k = oracle::random_domain_point(rng);
    for (int l = 0; l < 3; ++l) {
      const Vec3C xpsi = apply_position(psi, k, l, params);
      CHECK(std::abs(k.cast<Complex>().dot(xpsi)) < 1e-8 * std::max(1.0, xpsi.norm()));
      // naive i d_l: k . (x_l Psi) = -i Psi_l
      const Vec3C naive = Complex(0, 1) * psi.jacobian(k).col(l);
      const Complex kdot = k.cast<Complex>().dot(naive);
      CHECK(std::abs(kdot - Complex(0, -1) * psi.value(k)[l]) <
            1e-8 * std::max(1.0, psi.value(k).norm()));
    }
  }
}

TEST_CASE("compact form matches the direct form") {
  std::mt19937_64 rng(203);
  for (const Gauge& g : oracle::kGauges)
    for (double s : {0.0, 0.5}) {
      const ConnectionParams params{s, g};
      for (int t = 0; t < 34; ++t) {
        const WaveSection psi = random_bump(rng);
        const Vec3R k = oracle::random_domain_point(rng);
        const int l = static_cast<int>(rng() % 3);
        const Vec3C a = apply_position(psi, k, l, params);
        const Vec3C b = apply_position_compact(psi, k, l, params);
        CHECK((a - b).norm() < 1e-8 * std::max(1.0, a.norm()));
      }
    }
}

TEST_CASE("compact form annihilates scaled triad legs") {
  const ConnectionParams params{0.5, Gauge::stereo_north()};
  std::mt19937_64 rng(204);
  WaveSection sec;
  sec.value = [](const Vec3R& k) -> Vec3C {
    return std::pow(k.norm(), 0.5) * frame_stereo_north(k).E.col(1);
  };
  for (int t = 0; t < 10; ++t) {
    const Vec3R k = oracle::random_domain_point(rng);
    for (int l = 0; l < 3; ++l)
      CHECK(apply_position_compact(sec, k, l, params).norm() < 1e-8);
  }
}

TEST_CASE("components commute; Pryce components do not") {
  std::mt19937_64 rng(205);
  const ConnectionParams params{0.5, Gauge::stereo_north()};
  double max_res = 0.0, max_pryce = 0.0;
  for (int t = 0; t < 50; ++t) {
    const WaveSection psi = random_bump(rng);
    const Vec3R k = oracle::random_domain_point(rng);
    const int l = static_cast<int>(rng() % 3);
    const int m = (l + 1 + static_cast<int>(rng() % 2)) % 3;
    const double res = commutator_residual(psi, k, l, m, params).norm();
    max_res = std::max(max_res, res);
    max_pryce = std::max(max_pryce, pryce_commutator(psi, k, l, m).norm());
  }
  CHECK(max_res < 1e-5);
  CHECK(max_pryce > 1e-2);
  SUBCASE("l = m is exactly zero") {
    const WaveSection psi = random_bump(rng);
    const Vec3R k = oracle::random_domain_point(rng);
    CHECK(commutator_residual(psi, k, 1, 1, params).norm() == 0.0);
  }
}

TEST_CASE("Pryce operator differs from the position operator by the Sigma term") {
  std::mt19937_64 rng(206);
  const ConnectionParams params{0.5, Gauge::stereo_north()};
  for (int t = 0; t < 20; ++t) {
    const WaveSection psi = random_bump(rng);
    const Vec3R k = oracle::random_domain_point(rng);
    for (int l = 0; l < 3; ++l) {
      const Vec3C diff =
          apply_position(psi, k, l, params) - pryce_position(psi, k, l);
      const Vec3C sigma_term =
          sigma_coefficient(k, params.gauge)[l] * (helicity(k) * psi.value(k));
      CHECK((diff - sigma_term).norm() < 1e-9 * std::max(1.0, sigma_term.norm()));
    }
  }
}

TEST_CASE("Pryce operator preserves transversality") {
  std::mt19937_64 rng(207);
  for (int t = 0; t < 20; ++t) {
    const WaveSection psi = random_bump(rng);
    const Vec3R k = oracle::random_domain_point(rng);
    for (int l = 0; l < 3; ++l) {
      const Vec3C xp = pryce_position(psi, k, l);
      CHECK(std::abs(k.cast<Complex>().dot(xp)) < 1e-8 * std::max(1.0, xp.norm()));
    }
  }
}

TEST_CASE("gauge covariance: helicity eigensections differ by a unit phase") {
  std::mt19937_64 rng(208);
  const Vec3R X(0.2, 0.5, -0.3);
  const WaveSection a = helicity_eigenstate(X, +1, 0.5, Gauge::stereo_north());
  const WaveSection b = helicity_eigenstate(X, +1, 0.5, Gauge::spherical());
  for (int t = 0; t < 25; ++t) {
    const Vec3R k = oracle::random_domain_point(rng);
    const Vec3C va = a.value(k), vb = b.value(k);
    const Complex ratio = va.dot(vb) / va.squaredNorm();
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    CHECK((vb - ratio * va).norm() < 1e-10 * va.norm());
    // both satisfy the eigen-relation in their own gauge
    for (int l = 0; l < 3; ++l) {
      CHECK((apply_position(b, k, l, {0.5, Gauge::spherical()}) - X[l] * vb).norm() <
            1e-8 * std::max(1.0, vb.norm()));
    }
  }
}
