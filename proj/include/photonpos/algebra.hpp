#pragma once

#include <array>

#include "photonpos/types.hpp"

namespace photonpos {

/// Spin-1 matrices with entries (S_j)_{rl} = -i eps_{jrl}.
std::array<Mat3C, 3> spin_matrices();

/// Helicity operator Sigma = (k . S)/|k|.  Hermitian, annihilates k,
/// eigenvalues {+1, 0, -1}.  Throws on |k| = 0.
Mat3C helicity(const Vec3R& k);

/// Transverse projector P = 1 - k k^T / |k|^2 onto the plane orthogonal
/// to k.  Throws on |k| = 0.
Mat3C transverse_projector(const Vec3R& k);

/// (k x S)_l = eps_{lab} k_a S_b, the orbital part of the closed-form
/// connection.
Mat3C k_cross_spin(const Vec3R& k, int l);

}  // namespace photonpos
