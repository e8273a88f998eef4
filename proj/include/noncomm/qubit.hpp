#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace noncomm {

using BlochVector = Eigen::Vector3d;
using DensityMatrix = Eigen::Matrix2cd;

// Bloch-ball excess tolerated at API boundaries before it is an error.
inline constexpr double kBlochNormSlack = 1e-6;

struct NormViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const DensityMatrix& pauli_x();
const DensityMatrix& pauli_y();
const DensityMatrix& pauli_z();

/// Measured observable sin(angle) sigma_x + cos(angle) sigma_z.
/// `axis` is the corresponding unit vector on the Bloch sphere; the
/// matrix squares to the identity (eigenvalues +-1).
struct Observable {
  double angle = 0.0;        // radians, canonical in [0, 2*pi)
  Eigen::Vector3d axis;      // (sin angle, 0, cos angle)
  Eigen::Matrix2cd matrix;   // axis . sigma
};

Observable observable_from_angle(double theta);

/// r_i = Tr(rho sigma_i).
BlochVector bloch_from_density(const DensityMatrix& rho);

/// rho = (I + r.sigma)/2. Norms in (1, 1 + slack] are clamped radially
/// to the unit sphere; anything larger throws NormViolation.
DensityMatrix density_from_bloch(const BlochVector& r);

/// Tr(A rho), guaranteed real for Hermitian inputs.
double expectation(const DensityMatrix& rho, const Observable& a);

/// Hermitian, unit trace, eigenvalues >= -1e-9.
bool is_valid_density(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace noncomm
