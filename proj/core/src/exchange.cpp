#include "anisogate/exchange.hpp"

#include <cmath>
#include <string>

#include "anisogate/error.hpp"

namespace anisogate {

namespace {

bool finite(double x) { return std::isfinite(x); }

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

void PhysicalDevice::validate() const {
  require(finite(a0) && finite(omega0) && finite(fD) && finite(fR) && finite(t) && finite(kMatrixElement),
          ErrorKind::InvalidArgument, "device parameters must be finite");
  require(a0 > 0.0, ErrorKind::InvalidArgument, "device a0 must be positive");
  require(omega0 > 0.0, ErrorKind::InvalidArgument, "device omega0 must be positive");
}

void PulseControls::validate() const {
  require(finite(s) && finite(cAlpha) && finite(cBeta) && finite(cGamma) && finite(lambda),
          ErrorKind::InvalidArgument, "pulse controls must be finite");
}

bool PulseControls::strong_coupling() const { return std::abs(s) > kStrongCouplingWarning; }

void GateParams::validate() const {
  require(finite(lambda) && finite(alpha) && finite(beta) && finite(gamma), ErrorKind::InvalidArgument,
          "gate parameters must be finite");
  require(lambda >= 0.0, ErrorKind::InvalidArgument, "gate lambda must be non-negative");
}

double GateParams::angle_per_lambda() const { return rotation_direction().norm(); }

void PseudospinRotation::validate() const {
  require(axis.allFinite() && finite(angle) && finite(globalPhase), ErrorKind::InvalidArgument,
          "pseudospin rotation must be finite");
  require(std::abs(axis.norm() - 1.0) < tol::kUnitary, ErrorKind::InvalidArgument,
          "pseudospin rotation axis must be a unit vector");
}

namespace basis {

Vec4 singlet() {
  Vec4 v = Vec4::Zero();
  v(kUpDown) = kInvSqrt2;
  v(kDownUp) = -kInvSqrt2;
  return v;
}

Vec4 triplet0() {
  Vec4 v = Vec4::Zero();
  v(kUpDown) = kInvSqrt2;
  v(kDownUp) = kInvSqrt2;
  return v;
}

Vec4 triplet_plus() { return Vec4::Unit(kUpUp); }
Vec4 triplet_minus() { return Vec4::Unit(kDownDown); }

Eigen::Matrix<Complex, 4, 2> pseudospin_frame() {
  Eigen::Matrix<Complex, 4, 2> frame;
  frame.col(0) = triplet0();
  frame.col(1) = singlet();
  return frame;
}

}  // namespace basis

double spin_orbit_strength(const PhysicalDevice& device) {
  device.validate();
  return (device.fD - device.fR) / (device.a0 * device.omega0);
}

double precession_angle(const PhysicalDevice& device) {
  device.validate();
  require(device.t != 0.0, ErrorKind::Degenerate, "tunneling amplitude t must be nonzero");
  const double s = spin_orbit_strength(device);
  const double tanHalf = s * device.a0 * device.omega0 * device.kMatrixElement / (std::sqrt(2.0) * device.t);
  return 2.0 * std::atan(tanHalf);
}

GateParams params_from_controls(const PulseControls& controls) {
  controls.validate();
  GateParams p;
  p.lambda = controls.lambda;
  p.alpha = controls.cAlpha * controls.s;
  p.beta = controls.cBeta * controls.s;
  p.gamma = controls.cGamma * controls.s * controls.s;
  return p;
}

Mat4 hamiltonian(const GateParams& params) {
  params.validate();
  // T+ and T- are annihilated by every term once the -1/4 offset is included;
  // only the {|ud>, |du>} block is nontrivial.
  Mat4 h = Mat4::Zero();
  using namespace basis;
  h(kUpDown, kUpDown) = -0.5 + 0.5 * params.alpha;
  h(kDownUp, kDownUp) = -0.5 - 0.5 * params.alpha;
  h(kUpDown, kDownUp) = Complex(0.5 * (1.0 + params.gamma), 0.5 * params.beta);
  h(kDownUp, kUpDown) = Complex(0.5 * (1.0 + params.gamma), -0.5 * params.beta);
  return h;
}

TwoSpinGate gate_unitary(const GateParams& params) {
  params.validate();
  // Block = -1/2 + (1/2)[(1+gamma) tx - beta ty + alpha tz] with t the Pauli
  // matrices on (|ud>, |du>).
  const double mx = 1.0 + params.gamma;
  const double my = -params.beta;
  const double mz = params.alpha;
  const double r = std::sqrt(mx * mx + my * my + mz * mz);
  const double half = 0.5 * params.lambda * r;

  Mat2 block = std::cos(half) * Mat2::Identity();
  if (r > 0.0) {
    const Mat2 m = mx * pauli::x() + my * pauli::y() + mz * pauli::z();
    block += Complex(0.0, -std::sin(half) / r) * m;
  }
  block *= std::polar(1.0, 0.5 * params.lambda);

  TwoSpinGate gate;
  gate.matrix = Mat4::Identity();
  gate.matrix.block<2, 2>(basis::kUpDown, basis::kUpDown) = block;
  return gate;
}

double pseudospin_angle(const GateParams& params) { return params.lambda * params.angle_per_lambda(); }

double lambda_for_angle(double angle, double alpha, double beta, double gamma) {
  const double norm = GateParams{0.0, alpha, beta, gamma}.angle_per_lambda();
  require(norm > 0.0, ErrorKind::Degenerate, "rotation axis is degenerate (gamma = -1)");
  return angle / norm;
}

PseudospinRotation pseudospin_form(const GateParams& params) {
  params.validate();
  PseudospinRotation rot;
  rot.globalPhase = 0.5 * params.lambda;
  if (params.lambda == 0.0) return rot;

  const Vec3 direction = params.rotation_direction();
  const double norm = direction.norm();
  require(norm > 0.0, ErrorKind::Degenerate,
          "pseudospin rotation axis is undefined for (alpha, beta, 1+gamma) = 0");
  rot.axis = direction / norm;
  rot.angle = wrap(params.lambda * norm, kFourPi);
  return rot;
}

TwoSpinGate gate_from_pseudospin(const PseudospinRotation& rotation) {
  rotation.validate();
  const double half = 0.5 * rotation.angle;
  const Mat2 n = rotation.axis.x() * pauli::x() + rotation.axis.y() * pauli::y() + rotation.axis.z() * pauli::z();
  const Mat2 pseudo =
      std::polar(1.0, rotation.globalPhase) * (std::cos(half) * Mat2::Identity() - Complex(0.0, std::sin(half)) * n);

  const auto frame = basis::pseudospin_frame();
  TwoSpinGate gate;
  gate.matrix = frame * pseudo * frame.adjoint();
  gate.matrix(basis::kUpUp, basis::kUpUp) = 1.0;
  gate.matrix(basis::kDownDown, basis::kDownDown) = 1.0;
  return gate;
}

}  // namespace anisogate
