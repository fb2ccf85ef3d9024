#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "photonpos/algebra.hpp"
#include "photonpos/berry.hpp"
#include "photonpos/eigenstates.hpp"

using namespace photonpos;

TEST_CASE("Berry potential") {
  SUBCASE("matches the brute-force index sum for constant (a, b)") {
    std::mt19937_64 rng(501);
    for (int t = 0; t < 50; ++t) {
      const Vec3R k = oracle::random_domain_point(rng);
      for (int lam : {+1, -1}) {
        const Vec3R a = berry_potential(k, lam, Gauge::stereo_north());
        for (int l = 0; l < 3; ++l) {
          double sum = 0.0;
          for (int m = 0; m < 3; ++m) sum += oracle::levi_civita(l, m, 2) * k[m];
          CHECK(a[l] == doctest::Approx(-lam * sum / (k.norm() * (k.norm() - k[2])))
                            .epsilon(1e-12));
        }
        CHECK(a[2] == 0.0);  // eps_{3m3} = 0
      }
    }
  }
  SUBCASE("pinned value at k = (1,0,0)") {
    // eps_{2m3} k_m = -k_1, so A_2 = -lambda * (-1) = +1 for lambda = +1
    const Vec3R a = berry_potential(Vec3R(1, 0, 0), +1, Gauge::stereo_north());
    CHECK((a - Vec3R(0, 1, 0)).norm() < 1e-14);
  }
}

TEST_CASE("closed-form Berry phases") {
  std::mt19937_64 rng(502);
  std::uniform_real_distribution<double> u(0.05, M_PI - 0.05);
  SUBCASE("gamma_1 - gamma_2 = 2 pi lambda; phase factors all equal") {
    for (int t = 0; t < 40; ++t) {
      const double th = u(rng);
      for (int lam : {+1, -1}) {
        CHECK(berry_phase_closed(th, lam, 1) - berry_phase_closed(th, lam, 2) ==
              doctest::Approx(lam * 2 * M_PI));
        const Complex e1 = std::exp(Complex(0, berry_phase_closed(th, lam, 1)));
        const Complex e2 = std::exp(Complex(0, berry_phase_closed(th, lam, 2)));
        const Complex e3 = std::exp(Complex(0, berry_phase_closed(th, lam, 3)));
        CHECK(std::abs(e1 - e2) < 1e-12);
        CHECK(std::abs(e2 - e3) < 1e-12);
      }
    }
  }
  SUBCASE("gamma_3 = -4 pi lambda sin^2(theta/2)") {
    for (int t = 0; t < 20; ++t) {
      const double th = u(rng);
      CHECK(berry_phase_closed(th, 1, 3) ==
            doctest::Approx(-4 * M_PI * std::pow(std::sin(th / 2), 2)).epsilon(1e-12));
    }
  }
  SUBCASE("theta = pi allowed only for gamma_1") {
    CHECK(berry_phase_closed(M_PI, 1, 1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(berry_phase_closed(M_PI, 1, 2), std::domain_error);
    CHECK_THROWS_AS(berry_phase_closed(1.5 * M_PI, 1, 1), std::domain_error);
  }
}

TEST_CASE("loop integrals reproduce the closed forms") {
  const Gauge gauges[3] = {Gauge::stereo_north(), Gauge::spherical(),
                           Gauge::stereo_south()};
  for (double th : {M_PI / 6, M_PI / 4, M_PI / 3, M_PI / 2, 2 * M_PI / 3})
    for (int lam : {+1, -1})
      for (int w = 1; w <= 3; ++w) {
        const LoopSpec loop = LoopSpec::circle(th, 1.3, gauges[w - 1], lam);
        const double gamma = berry_phase_integral(loop);
        CHECK(std::abs(gamma - berry_phase_closed(th, lam, w)) < 1e-8);
      }
}

TEST_CASE("pinned circle value: theta = pi/3, lambda = 1, spherical gauge") {
  const LoopSpec loop = LoopSpec::circle(M_PI / 3, 1.0, Gauge::spherical(), +1);
  CHECK(berry_phase_integral(loop) == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("orientation reversal negates the phase") {
  const LoopSpec fwd = LoopSpec::circle(M_PI / 4, 1.0, Gauge::stereo_north(), +1);
  LoopSpec rev = fwd;
  rev.k = [f = fwd.k](double tau) { return f(1.0 - tau); };
  rev.dk = [d = fwd.dk](double tau) { return Vec3R(-d(1.0 - tau)); };
  CHECK(berry_phase_integral(rev) ==
        doctest::Approx(-berry_phase_integral(fwd)).epsilon(1e-10));
}

TEST_CASE("transport") {
  SUBCASE("theta = pi/2 circle, stereo-north: accumulated phase 2 pi") {
    const LoopSpec loop = LoopSpec::circle(M_PI / 2, 1.0, Gauge::stereo_north(), +1);
    const Vec3C psi0 =
        helicity_eigenstate(Vec3R::Zero(), +1, 0.5, Gauge::stereo_north())
            .value(loop.point(0.0));
    const TransportResult r = transport(loop, psi0);
    CHECK(r.phase == doctest::Approx(2 * M_PI).epsilon(1e-8));
    CHECK((r.psi - std::exp(Complex(0, r.phase)) * psi0).norm() < 1e-8);
    CHECK(std::abs(r.psi.norm() - psi0.norm()) < 1e-9);
  }
  SUBCASE("meridian (d phi = 0) accumulates no phase in stereo-north") {
    LoopSpec loop;
    loop.gauge = Gauge::stereo_north();
    loop.lambda = +1;
    loop.k = [](double tau) {
      const double th = M_PI / 6 + (2 * M_PI / 3) * tau;  // phi = 0 meridian
      return Vec3R(std::sin(th), 0.0, std::cos(th));
    };
    const Vec3C psi0 = helicity_eigenstate(Vec3R::Zero(), +1, 0.5, Gauge::stereo_north())
                           .value(loop.point(0.0));
    const TransportResult r = transport(loop, psi0);
    CHECK(std::abs(r.phase) < 1e-9);
    CHECK(std::abs(berry_line_integral(loop)) < 1e-10);
  }
  SUBCASE("transport phase equals the loop integral across gauges") {
    for (int w = 0; w < 3; ++w)
      for (double th : {M_PI / 4, M_PI / 2, 2 * M_PI / 3}) {
        const LoopSpec loop = LoopSpec::circle(th, 0.8, oracle::kGauges[w], -1);
        const Vec3C psi0 =
            helicity_eigenstate(Vec3R::Zero(), -1, 0.5, oracle::kGauges[w])
                .value(loop.point(0.0));
        const TransportResult r = transport(loop, psi0);
        CHECK(std::abs(r.phase - berry_phase_integral(loop)) < 1e-6);
      }
  }
  SUBCASE("non-eigenvector start rejected; cut-approaching loop rejected") {
    const LoopSpec loop = LoopSpec::circle(M_PI / 2, 1.0, Gauge::stereo_north(), +1);
    CHECK_THROWS_AS(transport(loop, Vec3C(1, 0, 0)), std::invalid_argument);
    const LoopSpec bad = LoopSpec::circle(1e-10, 1.0, Gauge::stereo_north(), +1);
    const Vec3C psi0(1, 0, 0);
    CHECK_THROWS_AS(berry_phase_integral(bad), std::domain_error);
  }
}

TEST_CASE("open curves rejected by the phase integral, polylines integrate per segment") {
  LoopSpec open;
  open.gauge = Gauge::stereo_north();
  open.k = [](double tau) { return Vec3R(1.0 + tau, 0.2, -0.3); };
  open.closed = false;
  CHECK_THROWS_AS(berry_phase_integral(open), std::invalid_argument);

  // square loop below the equator vs its parametric version
  std::vector<Vec3R> nodes = {{0.8, 0.0, -0.6}, {0.0, 0.8, -0.6}, {-0.8, 0.0, -0.6},
                              {0.0, -0.8, -0.6}, {0.8, 0.0, -0.6}};
  const LoopSpec poly = LoopSpec::polyline(nodes, Gauge::stereo_north(), +1);
  CHECK(poly.closed);
  const double g_poly = berry_phase_integral(poly);
  LoopSpec para;
  para.gauge = Gauge::stereo_north();
  para.lambda = +1;
  para.closed = true;
  para.k = poly.k;
  para.dk = poly.dk;
  CHECK(g_poly == doctest::Approx(berry_phase_integral(para)).epsilon(1e-9));
}

TEST_CASE("Stokes: smooth (a, b) rotations do not change closed-loop phases") {
  std::mt19937_64 rng(503);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 8; ++t) {
    const double ca = u(rng), cb = u(rng), cc = u(rng);
    auto alpha = [ca, cb, cc](const Vec3R& k) {
      return 0.4 * ca * k[0] + 0.3 * cb * k[1] * k[2] + 0.2 * cc * std::sin(k[2]);
    };
    const Gauge rotated = Gauge::general_rotation(alpha);
    // small random circle away from the cut
    const double th = 1.0 + 0.8 * u(rng);
    const LoopSpec base = LoopSpec::circle(th, 1.0 + 0.3 * u(rng), Gauge::stereo_north(), +1);
    LoopSpec rot = base;
    rot.gauge = rotated;
    CHECK(std::abs(berry_phase_integral(rot) - berry_phase_integral(base)) < 1e-8);
  }
}

TEST_CASE("curvature of the helicity connection D'") {
  std::mt19937_64 rng(504);
  SUBCASE("l = m vanishes") {
    const Vec3R k = oracle::random_domain_point(rng);
    CHECK(dprime_curvature(k, 2, 2, Gauge::stereo_north()).norm() == 0.0);
  }
  SUBCASE("matches the finite-difference commutator on sections") {
    for (const Gauge& g : oracle::kGauges)
      for (int t = 0; t < 6; ++t) {
        const Vec3R k = oracle::random_domain_point(rng);
        const WaveSection psi =
            gaussian_bump(k, oracle::random_complex_vec(rng), 0.9);
        for (int l = 0; l < 3; ++l)
          for (int m = l + 1; m < 3; ++m) {
            // nested finite differences of D'_l D'_m - D'_m D'_l
            const double h = default_fd_step(k);
            const double h2 = std::sqrt(h) * std::max(1.0, k.norm());
            WaveSection dm, dl;
            dm.value = [&psi, m, &g, h](const Vec3R& kk) {
              return dprime_apply(psi, kk, m, g, h);
            };
            dl.value = [&psi, l, &g, h](const Vec3R& kk) {
              return dprime_apply(psi, kk, l, g, h);
            };
            const Vec3C comm = dprime_apply(dm, k, l, g, h2) - dprime_apply(dl, k, m, g, h2);
            const Vec3C closed = dprime_curvature(k, l, m, g) * psi.value(k);
            CHECK((comm - closed).norm() < 1e-6 * std::max(1.0, closed.norm()));
          }
      }
  }
  SUBCASE("gauge change shifts only through the Sigma-coefficient difference") {
    for (int t = 0; t < 10; ++t) {
      const Vec3R k = oracle::random_domain_point(rng);
      const double kn = k.norm();
      static const auto s = spin_matrices();
      const Vec3R ca = sigma_coefficient(k, Gauge::stereo_north());
      const Vec3R cb = sigma_coefficient(k, Gauge::spherical());
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
          if (l == m) continue;
          const Mat3C diff = dprime_curvature(k, l, m, Gauge::spherical()) -
                             dprime_curvature(k, l, m, Gauge::stereo_north());
          Mat3C pl = Mat3C::Zero(), pm = Mat3C::Zero();
          for (int j = 0; j < 3; ++j) {
            pl += (((l == j) ? 1.0 : 0.0) - k[l] * k[j] / (kn * kn)) / kn * s[j];
            pm += (((m == j) ? 1.0 : 0.0) - k[m] * k[j] / (kn * kn)) / kn * s[j];
          }
          const Mat3C expect =
              Complex(0, 1) * ((cb[m] - ca[m]) * pl - (cb[l] - ca[l]) * pm);
          CHECK((diff - expect).norm() < 1e-12);
        }
    }
  }
}
