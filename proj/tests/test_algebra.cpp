#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "photonpos/algebra.hpp"

using namespace photonpos;

TEST_CASE("spin matrices match the printed entries") {
  const auto s = spin_matrices();
  // (S_j)_{rl} = -i eps_{jrl}, checked against the permutation-sign oracle
  for (int j = 0; j < 3; ++j)
    for (int r = 0; r < 3; ++r)
      for (int l = 0; l < 3; ++l)
        CHECK(std::abs(s[j](r, l) - Complex(0, -1) * double(oracle::levi_civita(j, r, l))) ==
              0.0);
  CHECK(s[2](0, 1) == Complex(0, -1));
  CHECK(s[2](1, 0) == Complex(0, 1));
  CHECK(std::abs(s[2](0, 0)) == 0.0);
  CHECK(std::abs(s[2](2, 2)) == 0.0);
}

TEST_CASE("spin matrices are Hermitian and satisfy the su(2) algebra") {
  const auto s = spin_matrices();
  for (int j = 0; j < 3; ++j) CHECK((s[j] - s[j].adjoint()).norm() == 0.0);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      Mat3C expected = Mat3C::Zero();
      for (int m = 0; m < 3; ++m)
        expected += Complex(0, 1) * double(oracle::levi_civita(j, l, m)) * s[m];
      CHECK((s[j] * s[l] - s[l] * s[j] - expected).norm() < kAlgebraTol);
    }
}

TEST_CASE("helicity operator") {
  SUBCASE("k = (0,0,-1) gives -S_3") {
    const auto s = spin_matrices();
    CHECK((helicity(Vec3R(0, 0, -1)) + s[2]).norm() < kAlgebraTol);
  }
  SUBCASE("k = (1,0,0) gives S_1") {
    const auto s = spin_matrices();
    CHECK((helicity(Vec3R(1, 0, 0)) - s[0]).norm() < kAlgebraTol);
  }
  SUBCASE("Hermitian, annihilates k, eigenvalues {+1, 0, -1}") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const Vec3R k = oracle::random_domain_point(rng);
      const Mat3C sig = helicity(k);
      CHECK((sig - sig.adjoint()).norm() < kAlgebraTol);
      CHECK((sig * k.cast<Complex>()).norm() < kAlgebraTol);
      CHECK((sig * sig * sig - sig).norm() < 10 * kAlgebraTol);
      Eigen::ComplexEigenSolver<Mat3C> es(sig);
      Eigen::Vector3d ev = es.eigenvalues().real();
      std::sort(ev.data(), ev.data() + 3);
      CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
      CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("zero momentum rejected") {
    CHECK_THROWS_AS(helicity(Vec3R::Zero()), std::domain_error);
  }
}

TEST_CASE("transverse projector") {
  SUBCASE("axis-aligned") {
    const Mat3C p = transverse_projector(Vec3R(0, 0, 1));
    Mat3C expect = Mat3C::Zero();
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    CHECK((p - expect).norm() < kAlgebraTol);
  }
  SUBCASE("diagonal direction, entries from the formula") {
    const Vec3R k = Vec3R(1, 1, 1) / std::sqrt(3.0);
    const Mat3C p = transverse_projector(k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(p(i, j).real() == doctest::Approx(i == j ? 2.0 / 3 : -1.0 / 3).epsilon(1e-14));
  }
  SUBCASE("symmetric idempotent of rank 2 annihilating k") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const Vec3R k = oracle::random_domain_point(rng);
      const Mat3C p = transverse_projector(k);
      CHECK((p * p - p).norm() < 10 * kAlgebraTol);
      CHECK((p - p.transpose()).norm() < kAlgebraTol);
      CHECK((p * k.cast<Complex>()).norm() < 10 * kAlgebraTol * k.norm());
      CHECK(p.trace().real() == doctest::Approx(2.0).epsilon(1e-13));
    }
  }
  SUBCASE("zero momentum rejected") {
    CHECK_THROWS_AS(transverse_projector(Vec3R::Zero()), std::domain_error);
  }
}

TEST_CASE("constants validation") {
  CHECK_THROWS_AS(Constants(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Constants(1.0, -2.0), std::invalid_argument);
  const Constants cc(2.0, 3.0);
  CHECK(cc.hbar == 2.0);
  CHECK(cc.c == 3.0);
}
