#include "noncomm/qubit.hpp"

#include <cmath>
#include <numbers>

namespace noncomm {

namespace {
using namespace std::complex_literals;

DensityMatrix make_pauli(int which) {
  DensityMatrix m;
  switch (which) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -1i, 1i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}
}  // namespace

const DensityMatrix& pauli_x() {
  static const DensityMatrix m = make_pauli(0);
  return m;
}
const DensityMatrix& pauli_y() {
  static const DensityMatrix m = make_pauli(1);
  return m;
}
const DensityMatrix& pauli_z() {
  static const DensityMatrix m = make_pauli(2);
  return m;
}

Observable observable_from_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double canonical = std::fmod(theta, two_pi);
  if (canonical < 0.0) canonical += two_pi;
  Observable obs;
  obs.angle = canonical;
  obs.axis = Eigen::Vector3d(std::sin(canonical), 0.0, std::cos(canonical));
  obs.matrix = obs.axis.x() * pauli_x() + obs.axis.z() * pauli_z();
  return obs;
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  return {(rho * pauli_x()).trace().real(),
          (rho * pauli_y()).trace().real(),
          (rho * pauli_z()).trace().real()};
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  const double norm = r.norm();
  if (norm > 1.0 + kBlochNormSlack) {
    throw NormViolation("Bloch vector norm " + std::to_string(norm) +
                        " exceeds 1 + 1e-6");
  }
  BlochVector v = norm > 1.0 ? BlochVector(r / norm) : r;
  DensityMatrix rho = DensityMatrix::Identity() + v.x() * pauli_x() +
                      v.y() * pauli_y() + v.z() * pauli_z();
  return 0.5 * rho;
}

double expectation(const DensityMatrix& rho, const Observable& a) {
  return (a.matrix * rho).trace().real();
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
  if (std::abs(rho(0, 0).imag()) > tol || std::abs(rho(1, 1).imag()) > tol)
    return false;
  if (std::abs(rho(1, 0) - std::conj(rho(0, 1))) > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho);
  return solver.eigenvalues().minCoeff() >= -1e-9;
}

}  // namespace noncomm
