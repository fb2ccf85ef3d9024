#include "photonpos/phasespace.hpp"

#include <cmath>

#include "photonpos/connection.hpp"

namespace photonpos {

namespace {
const Complex kI(0.0, 1.0);

constexpr double eps3(int i, int j, int k) {
  return ((i - j) * (j - k) * (k - i)) / 2.0;
}

void check_idx(int kidx, int lidx) {
  if (kidx < 0 || kidx > 2 || lidx < 0 || lidx > 2)
    throw std::out_of_range("grid_d_operator: indices must lie in {0, 1, 2}");
}
}  // namespace

GridOperator grid_number_operator() {
  GridOperator n = GridOperator::Zero();
  n(1, 1) = 1.0;
  n(2, 2) = 2.0;
  return n;
}

Vec3C grid_phi_ket(int m) {
  if (m < 0 || m > 2) throw std::out_of_range("grid_phi_ket: m in {0, 1, 2}");
  const double phi = 2.0 * M_PI * m / 3.0;
  Vec3C v;
  for (int n = 0; n < 3; ++n) v[n] = std::exp(kI * (n * phi)) / std::sqrt(3.0);
  return v;
}

GridOperator grid_phase_operator() {
  GridOperator op = GridOperator::Zero();
  for (int m = 0; m < 3; ++m) {
    const Vec3C v = grid_phi_ket(m);
    op += (2.0 * M_PI * m / 3.0) * (v * v.adjoint());
  }
  return op;
}

std::array<GridOperator, 4> grid_d_operator_forms(int kidx, int lidx) {
  check_idx(kidx, lidx);
  const double k = kidx, l = lidx;
  // e^{i k phi-hat} and e^{i 2 pi l n-hat / 3} as spectral exponentials
  GridOperator exp_phi = GridOperator::Zero();
  for (int m = 0; m < 3; ++m) {
    const Vec3C v = grid_phi_ket(m);
    exp_phi += std::exp(kI * (k * 2.0 * M_PI * m / 3.0)) * (v * v.adjoint());
  }
  GridOperator exp_n = GridOperator::Zero();
  for (int n = 0; n < 3; ++n)
    exp_n(n, n) = std::exp(kI * (2.0 * M_PI * l * n / 3.0));

  std::array<GridOperator, 4> forms;
  forms[0] = std::exp(-kI * (M_PI * k * l / 3.0)) * exp_phi * exp_n;
  forms[1] = std::exp(kI * (M_PI * k * l / 3.0)) * exp_n * exp_phi;
  forms[2] = GridOperator::Zero();
  for (int m = 0; m < 3; ++m)
    forms[2] += std::exp(kI * (M_PI * k * l / 3.0)) *
                std::exp(kI * (2.0 * M_PI * k * m / 3.0)) *
                (grid_phi_ket((m + lidx) % 3) * grid_phi_ket(m).adjoint());
  forms[3] = GridOperator::Zero();
  for (int n = 0; n < 3; ++n) {
    Vec3C ket = Vec3C::Zero(), bra = Vec3C::Zero();
    ket[n] = 1.0;
    bra[(n + kidx) % 3] = 1.0;
    forms[3] += std::exp(kI * (M_PI * k * l / 3.0)) *
                std::exp(kI * (2.0 * M_PI * n * l / 3.0)) * (ket * bra.adjoint());
  }
  return forms;
}

GridOperator grid_d_operator(int kidx, int lidx) {
  return grid_d_operator_forms(kidx, lidx)[0];
}

double helicity_spin_projection(const Vec3R& p, int n) {
  if (n < 0 || n > 2) throw std::out_of_range("helicity_spin_projection: n in {0, 1, 2}");
  const double pn = p.norm();
  if (!(pn > 0.0)) throw std::domain_error("helicity_spin_projection: zero momentum");
  const int a = (n + 1) % 3;  // ((n+1) mod 3) + 1 in 1-based components
  const int b = (n + 2) % 3;
  double val = 0.0;
  for (int r = 0; r < 3; ++r) val += p[r] / pn * eps3(r, a, b);
  return val;
}

double phase_space_position(const Vec3R& p, const Vec3R& x, const GridPoint& g, int l,
                            const Gauge& gauge, const Constants& constants) {
  if (l < 0 || l > 2) throw std::out_of_range("phase_space_position: l in {0, 1, 2}");
  gauge.require_in_domain(p);
  const double p2 = p.squaredNorm();
  const int a = (g.n + 1) % 3;
  const int b = (g.n + 2) % 3;
  double bracket = 0.0;
  if (l == a) bracket += p[b] / p2;
  if (l == b) bracket -= p[a] / p2;
  bracket += sigma_coefficient(p, gauge)[l] * helicity_spin_projection(p, g.n);
  return x[l] + 2.0 * constants.hbar * bracket * std::sin(g.phi());
}

}  // namespace photonpos
