#pragma once

#include <vector>

#include "photonpos/connection.hpp"
#include "photonpos/quadrature.hpp"

namespace photonpos {

/// Parameters of a position eigenfunction: eigenvalue X, transverse
/// coefficients (c1, c2), weight s and gauge.
struct EigenParams {
  Vec3R X = Vec3R::Zero();
  Complex c1{1.0, 0.0};
  Complex c2{0.0, 0.0};
  double s = 0.5;
  Gauge gauge = Gauge::stereo_north();
};

/// Psi_X(k) = (c1 E1 + c2 E2) exp(-i k.X) |k|^s, transverse by construction,
/// with the analytic Jacobian attached (built from the closed-form frame
/// derivative d_l E_mu = -A_l E_mu).
WaveSection eigenfunction_momentum(const EigenParams& p);

/// Helicity eigenstate Psi_{X,lambda} = (E1 + i lambda E2)/sqrt(2) e^{-ik.X} |k|^s;
/// satisfies Sigma Psi = lambda Psi pointwise.
WaveSection helicity_eigenstate(const Vec3R& X, int lambda, double s, const Gauge& gauge);

/// (1/((2 pi)^3 |k|)) Psi_X^dag(k) Psi_X'(k); equals
/// (|c1|^2+|c2|^2) e^{i k.(X - X')} / (2 pi)^3 when both share (c1, c2).
/// Both parameter sets must share the gauge and s = 1/2.
Complex normalization_integrand(const EigenParams& p, const EigenParams& p2,
                                const Vec3R& k);

struct PositionWavefunctionResult {
  Vec3C value = Vec3C::Zero();
  double tail_bound = 0.0;     // bound on the dropped k > kmax contribution
  double angular_error = 0.0;  // adaptive cubature error estimate
  long evals = 0;              // radial integrand evaluations
  long cells = 0;              // angular cells examined
  bool converged = false;
};

/// sqrt(hbar c) int d^3k/(2 pi)^3 Psi_X(k) e^{i k.x} e^{-eps |k|} in spherical
/// k-coordinates, radial integral truncated at kmax (panel Gauss rule sized
/// by the local oscillation), angular integral adaptive over (cos theta, phi).
PositionWavefunctionResult position_wavefunction_numeric(
    const EigenParams& p, const Vec3R& x, double eps, double kmax,
    const QuadratureSpec& q, const Constants& constants = {});

/// Smallest kmax whose damped-tail bound
/// int_{kmax}^inf k^{2+s} e^{-eps k} dk <= target (incomplete-gamma style
/// bound kmax^{2+s} e^{-eps kmax} / (eps - (2+s)/kmax)).
double kmax_for_tail(double eps, double s, double target);
/// The bound itself, mapped to a bound on |Psi| via the angular measure.
double tail_bound_abs(double eps, double s, double kmax, double amplitude,
                      const Constants& constants = {});

struct ExtrapolationResult {
  Vec3C limit = Vec3C::Zero();
  double error_estimate = 0.0;
  bool diverged = false;
};

/// Richardson (Neville) extrapolation of samples f(eps_i) to eps = 0;
/// requires >= 3 levels, error estimated from the last two table columns.
ExtrapolationResult epsilon_extrapolate(const std::vector<double>& eps,
                                        const std::vector<Vec3C>& values);

/// Point for the closed-form evaluator: X = |x - X| and the direction
/// angles of x - X.
struct ClosedFormPoint {
  double X = 1.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
};
ClosedFormPoint closed_form_point(const Vec3R& x, const Vec3R& X);

/// The five closed-form radial-angular profiles (common factor
/// sqrt(hbar c) / (8 sqrt(2) pi^{3/2} X^{7/2}) included).  Valid for X > 0;
/// the first two additionally require theta1 != pi/2.
std::array<Complex, 5> closed_form_profiles(const ClosedFormPoint& cf,
                                            const Constants& constants = {});

/// Closed-form eigenfunction column
/// (c1 F_I + c2 F_II, -c1 F_II + c2 (F_I + F_III), c1 F_IV + c2 F_V).
Vec3C position_wavefunction_closed(const ClosedFormPoint& cf, Complex c1, Complex c2,
                                   const Constants& constants = {});

/// Psi^dag Psi of the closed-form column.
double energy_density(const ClosedFormPoint& cf, Complex c1, Complex c2,
                      const Constants& constants = {});

}  // namespace photonpos
