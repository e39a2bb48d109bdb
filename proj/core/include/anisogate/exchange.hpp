#pragma once

// Two-spin exchange gates with axially symmetric spin-orbit corrections.
//
// Conventions used throughout the library:
//   * hbar = 1 and S = sigma / 2.
//   * Two-spin product basis, in this order: |uu>, |ud>, |du>, |dd>
//     (spin 1 is the more significant factor).
//   * |S>  = (|ud> - |du>)/sqrt2,  |T0> = (|ud> + |du>)/sqrt2,
//     |T+> = |uu>,                 |T-> = |dd>.
//   * Pseudospin Pauli matrices act on the ordered pair (|T0>, |S>), so that
//     sigma_z|T0> = +|T0> and sigma_z|S> = -|S>. With this sign the gate
//     exp(-i lambda H) restricted to {S, T0} is exactly
//     exp(i lambda/2) exp(-i phi.sigma/2), phi = lambda (alpha, beta, 1+gamma).

#include "anisogate/linalg.hpp"

namespace anisogate {

/// Hund-Mulliken double-dot description. `kMatrixElement` is the matrix
/// element <Psi1|(kx+ky)|Psi2>, supplied by the caller.
struct PhysicalDevice {
  double a0 = 1.0;
  double omega0 = 1.0;
  double fD = 0.0;
  double fR = 0.0;
  double t = 1.0;
  double kMatrixElement = 0.0;

  void validate() const;
};

/// Pulse-shape controls: anisotropy scales as alpha = cAlpha s,
/// beta = cBeta s, gamma = cGamma s^2.
struct PulseControls {
  double s = 0.0;
  double cAlpha = 0.0;
  double cBeta = 1.0;
  double cGamma = 1.0;
  double lambda = 0.0;

  static constexpr double kStrongCouplingWarning = 0.3;

  void validate() const;
  /// Soft check: the scaling laws are small-s expansions.
  bool strong_coupling() const;
  bool time_symmetric() const { return cAlpha == 0.0; }
};

/// Pulse descriptor (lambda; alpha, beta, gamma) of one exchange gate.
struct GateParams {
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  void validate() const;
  /// Direction of the pseudospin rotation vector divided by lambda: (alpha, beta, 1+gamma).
  Vec3 rotation_direction() const { return {alpha, beta, 1.0 + gamma}; }
  /// |(alpha, beta, 1+gamma)| = (1 + 2 gamma + alpha^2 + beta^2 + gamma^2)^(1/2).
  double angle_per_lambda() const;

  friend bool operator==(const GateParams&, const GateParams&) = default;
};

struct TwoSpinGate {
  Mat4 matrix = Mat4::Identity();
};

/// Image of a gate on the {T0, S} block: exp(i globalPhase) exp(-i angle axis.sigma/2).
struct PseudospinRotation {
  Vec3 axis = Vec3::UnitZ();
  double angle = 0.0;        ///< in [0, 4 pi)
  double globalPhase = 0.0;  ///< lambda / 2, never reduced

  void validate() const;
};

/// Product-basis indices and the singlet/triplet vectors.
namespace basis {
inline constexpr int kUpUp = 0;
inline constexpr int kUpDown = 1;
inline constexpr int kDownUp = 2;
inline constexpr int kDownDown = 3;

Vec4 singlet();
Vec4 triplet0();
Vec4 triplet_plus();
Vec4 triplet_minus();
/// 4x2 isometry whose columns are |T0> and |S> (pseudospin up, down).
Eigen::Matrix<Complex, 4, 2> pseudospin_frame();
}  // namespace basis

/// s = (fD - fR) / (a0 omega0).
double spin_orbit_strength(const PhysicalDevice& device);

/// Spin precession angle during tunneling:
/// tan(eta/2) = s a0 omega0 <Psi1|(kx+ky)|Psi2> / (sqrt2 t).
double precession_angle(const PhysicalDevice& device);

GateParams params_from_controls(const PulseControls& controls);

/// H = S1.S2 + (alpha/2)(S1z - S2z) + beta (S1x S2y - S1y S2x)
///     + gamma (S1x S2x + S1y S2y) - 1/4.
Mat4 hamiltonian(const GateParams& params);

/// exp(-i lambda H), computed in closed form on the {|ud>, |du>} block.
TwoSpinGate gate_unitary(const GateParams& params);

PseudospinRotation pseudospin_form(const GateParams& params);

TwoSpinGate gate_from_pseudospin(const PseudospinRotation& rotation);

/// Rotation angle phi for a pulse of strength lambda: lambda * angle_per_lambda.
double pseudospin_angle(const GateParams& params);

/// Pulse strength needed for a pseudospin rotation by `angle` about the axis
/// fixed by (alpha, beta, gamma): lambda = angle / |(alpha, beta, 1+gamma)|.
double lambda_for_angle(double angle, double alpha, double beta, double gamma);

}  // namespace anisogate
