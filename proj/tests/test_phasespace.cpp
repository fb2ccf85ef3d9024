#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "photonpos/phasespace.hpp"

using namespace photonpos;

TEST_CASE("grid displacement operators") {
  SUBCASE("D(0,0) is the identity") {
    CHECK((grid_d_operator(0, 0) - GridOperator::Identity()).norm() < 1e-15);
  }
  SUBCASE("all four printed expressions agree entry-wise; unitary") {
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const auto forms = grid_d_operator_forms(k, l);
        for (int f = 1; f < 4; ++f)
          CHECK((forms[f] - forms[0]).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((forms[0].adjoint() * forms[0] - GridOperator::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
      }
  }
  SUBCASE("D(k,0) diagonal in the |phi_m> basis, D(0,l) diagonal in |n>") {
    for (int k = 0; k < 3; ++k) {
      const GridOperator d = grid_d_operator(k, 0);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const Complex elem = grid_phi_ket(a).adjoint() * d * grid_phi_ket(b);
          if (a != b) CHECK(std::abs(elem) < 1e-14);
        }
    }
    for (int l = 0; l < 3; ++l) {
      const GridOperator d = grid_d_operator(0, l);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (a != b) CHECK(std::abs(d(a, b)) < 1e-15);
    }
  }
  SUBCASE("out-of-range indices rejected") {
    CHECK_THROWS_AS(grid_d_operator(3, 0), std::out_of_range);
    CHECK_THROWS_AS(grid_d_operator(0, -1), std::out_of_range);
    CHECK_THROWS_AS(GridPoint(0, 3), std::out_of_range);
  }
}

TEST_CASE("number and phase operators") {
  const GridOperator n = grid_number_operator();
  CHECK(n(0, 0) == Complex(0, 0));
  CHECK(n(1, 1) == Complex(1, 0));
  CHECK(n(2, 2) == Complex(2, 0));
  const GridOperator phi = grid_phase_operator();
  // hermitian with eigenvalues {0, 2pi/3, 4pi/3}
  CHECK((phi - phi.adjoint()).norm() < 1e-14);
  Eigen::ComplexEigenSolver<Mat3C> es(phi);
  Eigen::Vector3d ev = es.eigenvalues().real();
  std::sort(ev.data(), ev.data() + 3);
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(2 * M_PI / 3).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(4 * M_PI / 3).epsilon(1e-12));
}

TEST_CASE("helicity spin projection factor") {
  SUBCASE("pinned index evaluations") {
    CHECK(helicity_spin_projection(Vec3R(0, 0, 1), 2) == doctest::Approx(1.0));
    CHECK(helicity_spin_projection(Vec3R(0, 0, 1), 0) == doctest::Approx(0.0));
  }
  SUBCASE("matches the brute-force eps sum; squares sum to one on unit p") {
    std::mt19937_64 rng(601);
    for (int t = 0; t < 50; ++t) {
      const Vec3R p = oracle::random_domain_point(rng).normalized();
      double sum2 = 0.0;
      for (int n = 0; n < 3; ++n) {
        double brute = 0.0;
        const int a = (n + 1) % 3, b = (n + 2) % 3;
        for (int r = 0; r < 3; ++r) brute += p[r] * oracle::levi_civita(r, a, b);
        const double got = helicity_spin_projection(p, n);
        CHECK(got == doctest::Approx(brute).epsilon(1e-13));
        sum2 += got * got;
      }
      CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("zero momentum rejected") {
    CHECK_THROWS_AS(helicity_spin_projection(Vec3R::Zero(), 0), std::domain_error);
  }
}

TEST_CASE("phase-space position image") {
  std::mt19937_64 rng(602);
  SUBCASE("m = 0 reduces exactly to x") {
    for (int t = 0; t < 30; ++t) {
      const Vec3R p = oracle::random_domain_point(rng);
      const Vec3R x = oracle::random_domain_point(rng);
      for (int n = 0; n < 3; ++n)
        for (int l = 0; l < 3; ++l)
          CHECK(phase_space_position(p, x, GridPoint(0, n), l, Gauge::stereo_north()) ==
                x[l]);
    }
  }
  SUBCASE("pinned value: p=(1,0,0), n=0, m=1, l=2 gives x2 - sqrt(3)") {
    const Vec3R x(0.4, -0.7, 0.1);
    const double got =
        phase_space_position(Vec3R(1, 0, 0), x, GridPoint(1, 0), 1, Gauge::stereo_north());
    CHECK(got == doctest::Approx(x[1] - std::sqrt(3.0)).epsilon(1e-14));
  }
  SUBCASE("m -> 3 - m flips the hbar term (sin parity)") {
    for (int t = 0; t < 20; ++t) {
      const Vec3R p = oracle::random_domain_point(rng);
      const Vec3R x = oracle::random_domain_point(rng);
      for (int n = 0; n < 3; ++n)
        for (int l = 0; l < 3; ++l) {
          const double d1 =
              phase_space_position(p, x, GridPoint(1, n), l, Gauge::stereo_north()) - x[l];
          const double d2 =
              phase_space_position(p, x, GridPoint(2, n), l, Gauge::stereo_north()) - x[l];
          CHECK(d1 == doctest::Approx(-d2).epsilon(1e-12));
        }
    }
  }
  SUBCASE("linear in hbar") {
    const Vec3R p(0.3, -0.8, 0.4), x(1.0, 2.0, -0.5);
    for (double hbar : {0.5, 1.0, 2.0, 7.0}) {
      const double d =
          phase_space_position(p, x, GridPoint(1, 1), 0, Gauge::stereo_north(),
                               Constants(hbar, 1.0)) -
          x[0];
      const double d1 = phase_space_position(p, x, GridPoint(1, 1), 0,
                                             Gauge::stereo_north(), Constants(1.0, 1.0)) -
                        x[0];
      CHECK(d == doctest::Approx(hbar * d1).epsilon(1e-12));
    }
  }
  SUBCASE("constant rotations do not change the image") {
    const Gauge rot = Gauge::general_rotation([](const Vec3R&) { return 0.83; });
    for (int t = 0; t < 20; ++t) {
      const Vec3R p = oracle::random_domain_point(rng);
      const Vec3R x = oracle::random_domain_point(rng);
      const GridPoint g(1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 3));
      const int l = static_cast<int>(rng() % 3);
      CHECK(phase_space_position(p, x, g, l, rot) ==
            doctest::Approx(phase_space_position(p, x, g, l, Gauge::stereo_north()))
                .epsilon(1e-9));
    }
  }
  SUBCASE("domain violation rejected") {
    CHECK_THROWS_AS(phase_space_position(Vec3R(0, 0, 1), Vec3R::Zero(), GridPoint(1, 0), 0,
                                         Gauge::stereo_north()),
                    std::domain_error);
  }
}
